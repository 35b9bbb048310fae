"""Rule base content and Mamdani min-max-min execution."""
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from splmat.fuzzy import (
    INPUT_TERMS,
    clip,
    make_output_variable,
    trapezoid_membership,
    union,
)
from splmat.rules import (
    INPUT_1,
    INPUT_2,
    OUTPUT,
    Rule,
    RuleAtom,
    default_rule_base,
    evaluate_block,
    firing_strength,
    infer,
)
from conftest import numeric_centroid

# Centroids of the extreme output terms bound every block output.
LOWEST = float(Fraction(19, 3))
HIGHEST = float(Fraction(415, 9))


def rule_for(rb, t1, t2):
    for rule in rb.rules:
        if (rule.antecedent_term(INPUT_1), rule.antecedent_term(INPUT_2)) == (t1, t2):
            return rule
    raise AssertionError((t1, t2))


class TestRuleBase:
    def test_nine_rules(self):
        assert len(default_rule_base().rules) == 9

    def test_antecedent_pairs_cover_term_square(self):
        rb = default_rule_base()
        pairs = {
            (r.antecedent_term(INPUT_1), r.antecedent_term(INPUT_2)) for r in rb.rules
        }
        assert pairs == set(product(("Yes", "No", "Partial"), repeat=2))
        assert len(rb.rules) == len(pairs)

    @pytest.mark.parametrize(
        "t1,t2,expected",
        [
            ("Yes", "Yes", "Very High"),
            ("Partial", "No", "Low"),
            ("No", "Yes", "Medium"),
            ("No", "No", "Very Low"),
            ("Yes", "Partial", "High"),
        ],
    )
    def test_lookup(self, t1, t2, expected):
        assert default_rule_base().lookup(t1, t2) == expected

    def test_conclusion_must_target_output(self):
        with pytest.raises(ValueError):
            Rule(
                antecedents=(RuleAtom(INPUT_1, "Yes"), RuleAtom(INPUT_2, "Yes")),
                conclusion=RuleAtom(INPUT_1, "Yes"),
            )

    def test_antecedents_must_cover_slots(self):
        with pytest.raises(ValueError):
            Rule(
                antecedents=(RuleAtom(INPUT_1, "Yes"), RuleAtom(INPUT_1, "No")),
                conclusion=RuleAtom(OUTPUT, "Low"),
            )


class TestFiringStrength:
    def test_both_plateaus(self):
        rb = default_rule_base()
        assert firing_strength(rb, rule_for(rb, "Yes", "Yes"), 45.0, 45.0) == 1.0

    def test_both_ramps(self):
        rb = default_rule_base()
        assert firing_strength(rb, rule_for(rb, "Partial", "Partial"), 19.0, 19.0) == pytest.approx(0.5)

    def test_min_of_memberships(self):
        rb = default_rule_base()
        assert firing_strength(rb, rule_for(rb, "Yes", "No"), 35.0, 10.0) == pytest.approx(0.4)

    def test_range_errors(self):
        rb = default_rule_base()
        rule = rule_for(rb, "Yes", "Yes")
        with pytest.raises(ValueError):
            firing_strength(rb, rule, -1.0, 10.0)
        with pytest.raises(ValueError):
            firing_strength(rb, rule, 10.0, 50.5)


def strengths_by_enumeration(x1, x2):
    """Recompute all nine strengths straight from the trapezoid formula."""
    out = {}
    for t1, t2 in product(("Yes", "No", "Partial"), repeat=2):
        mu1 = trapezoid_membership(x1, INPUT_TERMS[t1])
        mu2 = trapezoid_membership(x2, INPUT_TERMS[t2])
        out[(t1, t2)] = min(mu1, mu2)
    return out


class TestInfer:
    def test_single_full_rule(self):
        rb = default_rule_base()
        aggregate, trace = infer(rb, 45.0, 45.0)
        assert len(trace) == 1
        assert trace[0].strength == 1.0
        assert rb.rules[trace[0].index].conclusion.term == "Very High"
        assert aggregate.approx_equal(make_output_variable().terms["Very High"])

    def test_four_rules_fire_on_split_point(self):
        rb = default_rule_base()
        aggregate, trace = infer(rb, 19.0, 19.0)
        expected = strengths_by_enumeration(19.0, 19.0)
        fired = {
            (rb.rules[r.index].antecedent_term(INPUT_1),
             rb.rules[r.index].antecedent_term(INPUT_2)): r.strength
            for r in trace
        }
        assert fired == {
            pair: s for pair, s in expected.items() if s > 0.0
        }
        assert set(fired) == {("No", "No"), ("Partial", "Partial"),
                              ("Partial", "No"), ("No", "Partial")}
        assert all(s == pytest.approx(0.5) for s in fired.values())
        terms = make_output_variable().terms
        by_max = union(clip(terms["Very Low"], 0.5), clip(terms["Low"], 0.5))
        assert aggregate.approx_equal(by_max)

    def test_mixed_strengths(self):
        rb = default_rule_base()
        _, trace = infer(rb, 17.5, 45.0)
        fired = {
            rb.rules[r.index].conclusion.term: r.strength for r in trace
        }
        assert fired == {
            "Medium": pytest.approx(0.8),
            "High": pytest.approx(0.2),
        }

    def test_trace_matches_enumeration_on_grid(self):
        rb = default_rule_base()
        for x1 in np.arange(0.0, 50.01, 5.0):
            for x2 in np.arange(0.0, 50.01, 5.0):
                expected = strengths_by_enumeration(float(x1), float(x2))
                _, trace = infer(rb, float(x1), float(x2))
                fired = {
                    (rb.rules[r.index].antecedent_term(INPUT_1),
                     rb.rules[r.index].antecedent_term(INPUT_2)): r.strength
                    for r in trace
                }
                for pair, strength in expected.items():
                    if strength > 0.0:
                        assert fired[pair] == pytest.approx(strength, abs=1e-12)
                    else:
                        assert pair not in fired

    def test_clipped_conclusions_recorded(self):
        rb = default_rule_base()
        _, trace = infer(rb, 19.0, 19.0)
        for record in trace:
            term = rb.rules[record.index].conclusion.term
            expected = clip(make_output_variable().terms[term], record.strength)
            assert record.clipped == expected


class TestEvaluateBlock:
    def test_full_very_high(self):
        out = evaluate_block(45.0, 45.0)
        assert out == pytest.approx(float(Fraction(415, 9)), abs=1e-9)
        vh = make_output_variable().terms["Very High"]
        assert out == pytest.approx(numeric_centroid(vh), abs=1e-3)

    def test_full_medium(self):
        assert evaluate_block(40.0, 10.0) == pytest.approx(27.5, abs=1e-9)

    def test_two_rule_union(self):
        # Medium clipped at 0.8 union High clipped at 0.2
        assert evaluate_block(17.5, 45.0) == pytest.approx(float(Fraction(535, 18)), abs=1e-9)

    def test_split_point_union(self):
        # Very Low and Low both clipped at 0.5; exact mass ratio 1355/114
        assert evaluate_block(19.0, 19.0) == pytest.approx(float(Fraction(1355, 114)), abs=1e-9)

    @pytest.mark.parametrize(
        "x1,x2,expected",
        [
            (10.0, 10.0, float(Fraction(19, 3))),   # No,No fully fired
            (27.0, 27.0, 17.5),                      # Partial,Partial
            (45.0, 10.0, 27.5),                      # Yes,No
            (45.0, 27.0, 37.5),                      # Yes,Partial
        ],
    )
    def test_single_rule_full_strength_gives_term_centroid(self, x1, x2, expected):
        assert evaluate_block(x1, x2) == pytest.approx(expected, abs=1e-9)

    def test_commutative_on_grid(self):
        grid = np.arange(0.0, 50.01, 2.5)
        for x1 in grid:
            for x2 in grid:
                assert evaluate_block(float(x1), float(x2)) == pytest.approx(
                    evaluate_block(float(x2), float(x1)), abs=1e-9
                )

    def test_output_bounded_by_extreme_centroids(self):
        grid = np.arange(0.0, 50.01, 2.5)
        for x1 in grid:
            for x2 in grid:
                out = evaluate_block(float(x1), float(x2))
                assert LOWEST - 1e-9 <= out <= HIGHEST + 1e-9

    def test_range_errors(self):
        with pytest.raises(ValueError):
            evaluate_block(-0.1, 10.0)
        with pytest.raises(ValueError):
            evaluate_block(10.0, 51.0)

    def test_never_empty_in_range(self):
        rng = np.random.default_rng(11)
        for _ in range(300):
            out = evaluate_block(float(rng.uniform(0, 50)), float(rng.uniform(0, 50)))
            assert LOWEST - 1e-9 <= out <= HIGHEST + 1e-9
