"""Questionnaire catalog, hierarchical score reduction, and maturity reports."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from numbers import Real
from typing import Mapping, Sequence, Union

from .fuzzy import SCALE_MAX, SCALE_MIN, make_output_variable
from .rules import evaluate_block

CORE_ASSET = "core_asset"
PRODUCT_DEVELOPMENT = "product_development"
MANAGEMENT = "management"
OVERALL = "overall"

ACTIVITIES = (CORE_ASSET, PRODUCT_DEVELOPMENT, MANAGEMENT, OVERALL)

ACTIVITY_TITLES = {
    CORE_ASSET: "Core Asset Process Assessment",
    PRODUCT_DEVELOPMENT: "Product Development Process Assessment",
    MANAGEMENT: "Management Process Assessment",
    OVERALL: "Software Product Line Process Assessment",
}


@dataclass(frozen=True)
class Question:
    id: str
    category: str
    text: str


QUESTIONS: tuple[Question, ...] = (
    Question("q1", CORE_ASSET, "Are all of the core assets within the software product line repository and are the resulting products consistent with the scope of the software product line?"),
    Question("q2", CORE_ASSET, "Do all the components present in the core asset repository define the variability mechanism and tailor them for effective utilization?"),
    Question("q3", CORE_ASSET, "Do all the COTS present or added into the core asset repository satisfy the cost-benefits ratio for the organization?"),
    Question("q4", CORE_ASSET, "Is the core asset repository constantly updated with the addition of new assets as the product line progresses?"),
    Question("q5", CORE_ASSET, "Does a version control management system keep track of the core asset development and utilization history?"),
    Question("q6", PRODUCT_DEVELOPMENT, "Do all the products within the software product line share a common architecture?"),
    Question("q7", PRODUCT_DEVELOPMENT, "Does the variation among products remain within the scope of the software product line?"),
    Question("q8", PRODUCT_DEVELOPMENT, "Is every product released from the product line an effective business decision for the organization?"),
    Question("q9", PRODUCT_DEVELOPMENT, "Does the software product line produce a considerable number of products; in other words, do they produce more than one product?"),
    Question("q10", PRODUCT_DEVELOPMENT, "Does every product released from the software product line meet the qualification criteria of the organization?"),
    Question("q11", MANAGEMENT, "Is there a configuration management system established to handle the configuration management issues present in the software product line?"),
    Question("q12", MANAGEMENT, "Is a comprehensive description and analysis of the domain performed for the software product line?"),
    Question("q13", MANAGEMENT, "Does the ROI (Return on Investment) of the software product line meet the organization's financial goal?"),
    Question("q14", MANAGEMENT, "Are the requirements of the software product line clearly defined, analyzed, specified, verified and managed?"),
    Question("q15", MANAGEMENT, "Does the requirement of the software product line define the fundamental products and their features within the product line?"),
    Question("q16", MANAGEMENT, "Does the organizational structure support the software product line's concepts and principles?"),
    Question("q17", MANAGEMENT, "Are the essential activities of software product line development performed iteratively?"),
)

QUESTION_IDS: tuple[str, ...] = tuple(q.id for q in QUESTIONS)


def questions_in(category: str) -> tuple[str, ...]:
    return tuple(q.id for q in QUESTIONS if q.category == category)


# A reduction tree is either a leaf name or a pair of subtrees.
Tree = Union[str, tuple["Tree", "Tree"]]


def tree_leaves(tree: Tree) -> list[str]:
    if isinstance(tree, str):
        return [tree]
    left, right = tree
    return tree_leaves(left) + tree_leaves(right)


def tree_notation(tree: Tree) -> str:
    """Compact text form, e.g. '((q1,q2),q5)'."""
    if isinstance(tree, str):
        return tree
    left, right = tree
    return f"({tree_notation(left)},{tree_notation(right)})"


def tree_to_json(tree: Tree):
    """Leaf as string, node as two-element array."""
    if isinstance(tree, str):
        return tree
    left, right = tree
    return [tree_to_json(left), tree_to_json(right)]


def tree_from_json(obj) -> Tree:
    if isinstance(obj, str):
        return obj
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return (tree_from_json(obj[0]), tree_from_json(obj[1]))
    raise ValueError(f"tree node must be a string or a two-element array, got {obj!r}")


def check_tree(tree: Tree, expected_leaves: Sequence[str], label: str) -> None:
    leaves = tree_leaves(tree)
    if sorted(leaves) != sorted(expected_leaves) or len(set(leaves)) != len(leaves):
        raise ValueError(
            f"{label} tree must use each of {sorted(expected_leaves)} exactly once, "
            f"got leaves {leaves}"
        )


class ValidationError(ValueError):
    """Questionnaire data does not satisfy the answer contract."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


def validate(answers: Mapping[str, object]) -> list[str]:
    """Return violation messages (empty list means the answers are valid)."""
    violations = []
    for qid in QUESTION_IDS:
        if qid not in answers:
            violations.append(f"{qid}: missing answer")
            continue
        value = answers[qid]
        if isinstance(value, bool) or not isinstance(value, Real):
            violations.append(f"{qid}: value {value!r} is not numeric")
            continue
        if not SCALE_MIN <= float(value) <= SCALE_MAX:
            violations.append(
                f"{qid}: value {value} outside range {SCALE_MIN:g} to {SCALE_MAX:g}"
            )
    for qid in answers:
        if qid not in QUESTION_IDS:
            violations.append(f"{qid}: unknown question id")
    return violations


@dataclass(frozen=True)
class Questionnaire:
    """One complete set of 17 answers, each within [0, 50]."""

    answers: dict[str, float]
    respondent: str | None = None

    def __post_init__(self):
        violations = validate(self.answers)
        if violations:
            raise ValidationError(violations)
        object.__setattr__(
            self, "answers", {qid: float(self.answers[qid]) for qid in QUESTION_IDS}
        )


def average_respondents(responses: Sequence[Questionnaire]) -> Questionnaire:
    """Arithmetic mean per question over all respondents."""
    if not responses:
        raise ValueError("no responses to average")
    means = {
        qid: sum(r.answers[qid] for r in responses) / len(responses)
        for qid in QUESTION_IDS
    }
    return Questionnaire(means)


@dataclass(frozen=True)
class AssessmentConfig:
    """Binary combination order for each category and for the final stage."""

    core: Tree
    product: Tree
    management: Tree
    final: Tree

    def __post_init__(self):
        check_tree(self.core, questions_in(CORE_ASSET), "core")
        check_tree(self.product, questions_in(PRODUCT_DEVELOPMENT), "product")
        check_tree(self.management, questions_in(MANAGEMENT), "management")
        check_tree(self.final, ("core", "product", "management"), "final")

    def to_json(self) -> dict:
        return {
            "core": tree_to_json(self.core),
            "product": tree_to_json(self.product),
            "management": tree_to_json(self.management),
            "final": tree_to_json(self.final),
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "AssessmentConfig":
        missing = [k for k in ("core", "product", "management", "final") if k not in obj]
        if missing:
            raise ValueError(f"config missing tree(s): {missing}")
        return cls(
            core=tree_from_json(obj["core"]),
            product=tree_from_json(obj["product"]),
            management=tree_from_json(obj["management"]),
            final=tree_from_json(obj["final"]),
        )


def default_config() -> AssessmentConfig:
    """Combination order recovered by the calibration search (see calibration)."""
    return AssessmentConfig(
        core=((("q1", "q2"), ("q3", "q4")), "q5"),
        product=((("q6", "q7"), ("q8", "q9")), "q10"),
        management=((("q11", "q12"), ("q13", "q14")), (("q15", "q16"), "q17")),
        final=(("core", "product"), "management"),
    )


@dataclass(frozen=True)
class NodeTrace:
    """Intermediate block evaluation: node notation, inputs, crisp output."""

    section: str
    node: str
    left: float
    right: float
    score: float


def reduce_tree(
    values: Mapping[str, float], tree: Tree, section: str = "tree"
) -> tuple[float, list[NodeTrace]]:
    """Fold the tree bottom-up through two-input blocks.

    Leaves return their bound value; each internal node feeds its
    children's crisp scores into a fuzzy block, so intermediate outputs
    are re-fuzzified with the answer terms at the next stage.
    """
    trace: list[NodeTrace] = []

    def walk(node: Tree) -> float:
        if isinstance(node, str):
            try:
                return float(values[node])
            except KeyError:
                raise ValueError(f"unbound leaf {node!r}") from None
        left, right = node
        lv = walk(left)
        rv = walk(right)
        score = evaluate_block(lv, rv)
        trace.append(NodeTrace(section, tree_notation(node), lv, rv, score))
        return score

    return walk(tree), trace


def label_of(score: float) -> str:
    """Linguistic label: the output terms with positive membership at score."""
    if not SCALE_MIN <= score <= SCALE_MAX:
        raise ValueError(f"score {score} outside [{SCALE_MIN}, {SCALE_MAX}]")
    output = make_output_variable()
    hits = [name for name, s in output.terms.items() if s.membership(score) > 0.0]
    if len(hits) == 1:
        return hits[0]
    if len(hits) == 2:
        return f"{hits[0]} to {hits[1]}"
    raise AssertionError(f"output terms overlap more than pairwise at {score}: {hits}")


def level_of(score: float) -> int:
    """Maturity level 1..5: position of the strongest output term (ties go low)."""
    if not SCALE_MIN <= score <= SCALE_MAX:
        raise ValueError(f"score {score} outside [{SCALE_MIN}, {SCALE_MAX}]")
    output = make_output_variable()
    best_index = 0
    best_mu = -1.0
    for index, s in enumerate(output.terms.values()):
        mu = s.membership(score)
        if mu > best_mu:
            best_index = index
            best_mu = mu
    return best_index + 1


def display(value: float) -> str:
    """Two-decimal display string, ties rounded away from zero."""
    return str(Decimal(repr(float(value))).quantize(Decimal("0.01"), ROUND_HALF_UP))


@dataclass(frozen=True)
class ActivityAssessment:
    score: float
    label: str
    level: int


@dataclass(frozen=True)
class AssessmentReport:
    core_asset: ActivityAssessment
    product_development: ActivityAssessment
    management: ActivityAssessment
    overall: ActivityAssessment
    trace: tuple[NodeTrace, ...] = field(default=())

    def activity(self, name: str) -> ActivityAssessment:
        return getattr(self, name)


def _assessed(score: float) -> ActivityAssessment:
    return ActivityAssessment(score=score, label=label_of(score), level=level_of(score))


def assess(questionnaire: Questionnaire, config: AssessmentConfig | None = None) -> AssessmentReport:
    """Reduce the three categories, then the final stage, into one report."""
    cfg = config or default_config()
    answers = questionnaire.answers
    core_score, core_trace = reduce_tree(answers, cfg.core, CORE_ASSET)
    product_score, product_trace = reduce_tree(answers, cfg.product, PRODUCT_DEVELOPMENT)
    management_score, management_trace = reduce_tree(answers, cfg.management, MANAGEMENT)
    category_scores = {
        "core": core_score,
        "product": product_score,
        "management": management_score,
    }
    overall_score, final_trace = reduce_tree(category_scores, cfg.final, OVERALL)
    return AssessmentReport(
        core_asset=_assessed(core_score),
        product_development=_assessed(product_score),
        management=_assessed(management_score),
        overall=_assessed(overall_score),
        trace=tuple(core_trace + product_trace + management_trace + final_trace),
    )


@dataclass(frozen=True)
class WhatIfResult:
    base: AssessmentReport
    modified: AssessmentReport
    deltas: dict[str, float]


def whatif(
    base: Questionnaire,
    overrides: Mapping[str, float],
    config: AssessmentConfig | None = None,
) -> WhatIfResult:
    """Assess base and base-with-overrides under the same config; report deltas."""
    violations = []
    for qid, value in overrides.items():
        if qid not in QUESTION_IDS:
            violations.append(f"{qid}: unknown question id")
        elif isinstance(value, bool) or not isinstance(value, Real):
            violations.append(f"{qid}: value {value!r} is not numeric")
        elif not SCALE_MIN <= float(value) <= SCALE_MAX:
            violations.append(f"{qid}: value {value} outside range 0 to 50")
    if violations:
        raise ValidationError(violations)
    modified = Questionnaire({**base.answers, **{k: float(v) for k, v in overrides.items()}})
    base_report = assess(base, config)
    new_report = assess(modified, config)
    deltas = {
        name: new_report.activity(name).score - base_report.activity(name).score
        for name in ACTIVITIES
    }
    return WhatIfResult(base=base_report, modified=new_report, deltas=deltas)


# --- JSON file formats -----------------------------------------------------

def questionnaires_from_json(obj: Mapping) -> list[Questionnaire]:
    """Parse {"respondents": [{"id": ..., "answers": {...}}, ...]}."""
    if not isinstance(obj, Mapping) or "respondents" not in obj:
        raise ValueError('questionnaire file must contain a "respondents" list')
    respondents = obj["respondents"]
    if not isinstance(respondents, list) or not respondents:
        raise ValueError('"respondents" must be a non-empty list')
    out = []
    for i, entry in enumerate(respondents):
        if not isinstance(entry, Mapping) or "answers" not in entry:
            raise ValueError(f'respondent #{i + 1} must contain an "answers" map')
        out.append(Questionnaire(dict(entry["answers"]), respondent=entry.get("id")))
    return out


def load_questionnaires(path: str) -> list[Questionnaire]:
    with open(path, encoding="utf-8") as fh:
        return questionnaires_from_json(json.load(fh))


def load_config(path: str) -> AssessmentConfig:
    with open(path, encoding="utf-8") as fh:
        return AssessmentConfig.from_json(json.load(fh))


def _activity_json(a: ActivityAssessment) -> dict:
    return {
        "score": a.score,
        "display": display(a.score),
        "label": a.label,
        "level": a.level,
    }


def report_to_json(report: AssessmentReport) -> dict:
    """Report schema with full-precision scores plus 2-decimal display fields."""
    return {
        CORE_ASSET: _activity_json(report.core_asset),
        PRODUCT_DEVELOPMENT: _activity_json(report.product_development),
        MANAGEMENT: _activity_json(report.management),
        OVERALL: _activity_json(report.overall),
        "trace": [
            {
                "section": t.section,
                "node": t.node,
                "left": t.left,
                "right": t.right,
                "score": t.score,
                "display": display(t.score),
            }
            for t in report.trace
        ],
    }
