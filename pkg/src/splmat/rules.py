"""Mamdani min-max-min execution of two-input rule bases over crisp inputs."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fuzzy import (
    SCALE_MAX,
    SCALE_MIN,
    LinguisticVariable,
    PiecewiseLinearSet,
    centroid,
    clip,
    make_input_variable,
    make_output_variable,
    union,
    zero_set,
)

INPUT_1 = "input_1"
INPUT_2 = "input_2"
OUTPUT = "output"


@dataclass(frozen=True)
class RuleAtom:
    """A (variable slot, term name) pair, e.g. ('input_1', 'Yes')."""

    variable: str
    term: str


@dataclass(frozen=True)
class Rule:
    antecedents: tuple[RuleAtom, RuleAtom]
    conclusion: RuleAtom

    def __post_init__(self):
        slots = {a.variable for a in self.antecedents}
        if slots != {INPUT_1, INPUT_2}:
            raise ValueError(f"antecedents must cover both input slots, got {slots}")
        if self.conclusion.variable != OUTPUT:
            raise ValueError("conclusion must target the output variable")

    def antecedent_term(self, slot: str) -> str:
        for atom in self.antecedents:
            if atom.variable == slot:
                return atom.term
        raise KeyError(slot)


@dataclass(frozen=True)
class RuleBase:
    """Ordered rules sharing one input variable (both slots) and one output."""

    input_variable: LinguisticVariable
    output_variable: LinguisticVariable
    rules: tuple[Rule, ...]

    def __post_init__(self):
        for rule in self.rules:
            for atom in rule.antecedents:
                if atom.term not in self.input_variable.terms:
                    raise ValueError(f"unknown input term {atom.term!r}")
            if rule.conclusion.term not in self.output_variable.terms:
                raise ValueError(f"unknown output term {rule.conclusion.term!r}")

    def lookup(self, term1: str, term2: str) -> str:
        """Conclusion term for an antecedent term pair."""
        for rule in self.rules:
            if (rule.antecedent_term(INPUT_1), rule.antecedent_term(INPUT_2)) == (term1, term2):
                return rule.conclusion.term
        raise KeyError((term1, term2))


@dataclass(frozen=True)
class FiringRecord:
    """One fired rule: its index, strength, and clipped conclusion set."""

    index: int
    strength: float
    clipped: PiecewiseLinearSet


# Truth table of the nine maturity rules: (input_1, input_2) -> output.
TRUTH_TABLE: tuple[tuple[str, str, str], ...] = (
    ("Yes", "Yes", "Very High"),
    ("No", "No", "Very Low"),
    ("Partial", "Partial", "Low"),
    ("Yes", "No", "Medium"),
    ("No", "Yes", "Medium"),
    ("Yes", "Partial", "High"),
    ("Partial", "Yes", "High"),
    ("Partial", "No", "Low"),
    ("No", "Partial", "Low"),
)


@lru_cache(maxsize=1)
def default_rule_base() -> RuleBase:
    """The nine-rule base mapping answer term pairs to maturity terms."""
    rules = tuple(
        Rule(
            antecedents=(RuleAtom(INPUT_1, t1), RuleAtom(INPUT_2, t2)),
            conclusion=RuleAtom(OUTPUT, out),
        )
        for t1, t2, out in TRUTH_TABLE
    )
    return RuleBase(make_input_variable(), make_output_variable(), rules)


def _check_range(value: float, slot: str) -> float:
    value = float(value)
    if not SCALE_MIN <= value <= SCALE_MAX:
        raise ValueError(f"{slot}={value} outside [{SCALE_MIN}, {SCALE_MAX}]")
    return value


def firing_strength(rb: RuleBase, rule: Rule, x1: float, x2: float) -> float:
    """Degree to which the rule's antecedent is satisfied: min of both memberships."""
    x1 = _check_range(x1, INPUT_1)
    x2 = _check_range(x2, INPUT_2)
    mu1 = rb.input_variable.membership(rule.antecedent_term(INPUT_1), x1)
    mu2 = rb.input_variable.membership(rule.antecedent_term(INPUT_2), x2)
    return min(mu1, mu2)


def infer(rb: RuleBase, x1: float, x2: float) -> tuple[PiecewiseLinearSet, list[FiringRecord]]:
    """Run all rules on crisp inputs; aggregate clipped conclusions by union.

    Rules with zero strength contribute nothing and are left out of the
    trace.  The aggregate of no fired rules is the zero set.
    """
    x1 = _check_range(x1, INPUT_1)
    x2 = _check_range(x2, INPUT_2)
    aggregate: PiecewiseLinearSet | None = None
    trace: list[FiringRecord] = []
    for index, rule in enumerate(rb.rules):
        strength = firing_strength(rb, rule, x1, x2)
        if strength <= 0.0:
            continue
        clipped = clip(rb.output_variable.terms[rule.conclusion.term], strength)
        trace.append(FiringRecord(index, strength, clipped))
        aggregate = clipped if aggregate is None else union(aggregate, clipped)
    if aggregate is None:
        aggregate = zero_set()
    return aggregate, trace


# Large enough to keep a whole calibration search hot, bounded so a
# long-running service cannot grow without limit.
@lru_cache(maxsize=1 << 18)
def _evaluate_default(x1: float, x2: float) -> float:
    aggregate, _ = infer(default_rule_base(), x1, x2)
    return centroid(aggregate)


def evaluate_block(x1: float, x2: float, rule_base: RuleBase | None = None) -> float:
    """Crisp output of one two-input block: centroid of the inference aggregate.

    Results for the default rule base are memoized; the calibration
    search leans on this cache heavily.
    """
    if rule_base is None:
        return _evaluate_default(float(x1), float(x2))
    aggregate, _ = infer(rule_base, x1, x2)
    return centroid(aggregate)
