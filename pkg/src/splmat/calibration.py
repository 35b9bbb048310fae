"""Exhaustive reduction-tree search against the published case-study results.

The combination order of the questionnaire cascade is not given anywhere
in recoverable form, so this module enumerates every full binary tree
shape over each category (leaf order fixed to questionnaire order) and
every three-leaf final arrangement, and scores each candidate against
the case-study tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .assessment import (
    CORE_ASSET,
    MANAGEMENT,
    OVERALL,
    PRODUCT_DEVELOPMENT,
    AssessmentConfig,
    Questionnaire,
    Tree,
    assess,
    questions_in,
    tree_notation,
)
from .rules import evaluate_block

# Residuals within this epsilon of the minimum count as tied.
TIE_EPS = 1e-12

# Case-study questionnaire columns, in q1..q17 order.
CASE_STUDY_ANSWERS: dict[str, dict[str, float]] = {
    "case-1": dict(zip([f"q{i}" for i in range(1, 18)],
                       [35, 40, 25, 35, 25, 40, 10, 5, 50, 45, 30, 10, 15, 20, 30, 35, 7])),
    "case-2": dict(zip([f"q{i}" for i in range(1, 18)],
                       [40, 40, 15, 30, 50, 15, 15, 30, 50, 40, 50, 40, 40, 30, 40, 45, 25])),
    "case-3": dict(zip([f"q{i}" for i in range(1, 18)],
                       [32.5, 27.5, 30, 37.5, 40, 37.5, 32.5, 30, 35, 37.5, 32.5, 35, 30, 35, 32.5, 30, 37.5])),
    "case-4": dict(zip([f"q{i}" for i in range(1, 18)],
                       [40, 30, 35, 30, 20, 40, 35, 35, 30, 30, 25, 20, 30, 35, 35, 35, 35])),
}


@dataclass(frozen=True)
class CalibrationTarget:
    """One case study: its answers and the published activity scores."""

    name: str
    answers: dict[str, float]
    expected: dict[str, float]
    labels: dict[str, str] | None = None


@dataclass(frozen=True)
class CalibrationResult:
    best_configs: tuple[AssessmentConfig, ...]
    residual: float
    residual_matrix: tuple[dict[str, dict[str, float]], ...]
    searched: int

    def to_json(self) -> dict:
        return {
            "residual": self.residual,
            "searched": self.searched,
            "tied_configs": len(self.best_configs),
            "configs": [
                {
                    "core": tree_notation(cfg.core),
                    "product": tree_notation(cfg.product),
                    "management": tree_notation(cfg.management),
                    "final": tree_notation(cfg.final),
                }
                for cfg in self.best_configs
            ],
            "residual_matrix": list(self.residual_matrix),
        }


def case_study_targets() -> list[CalibrationTarget]:
    """The three case studies with fully published score tables."""
    return [
        CalibrationTarget(
            name="case-1",
            answers=CASE_STUDY_ANSWERS["case-1"],
            expected={CORE_ASSET: 34.84, PRODUCT_DEVELOPMENT: 29.72,
                      MANAGEMENT: 8.64, OVERALL: 17.5},
            labels={CORE_ASSET: "Medium to High", PRODUCT_DEVELOPMENT: "Medium",
                    MANAGEMENT: "Very Low", OVERALL: "Low"},
        ),
        CalibrationTarget(
            name="case-3",
            answers=CASE_STUDY_ANSWERS["case-3"],
            expected={CORE_ASSET: 37.5, PRODUCT_DEVELOPMENT: 34.84,
                      MANAGEMENT: 17.5, OVERALL: 27.07},
            labels={CORE_ASSET: "High", PRODUCT_DEVELOPMENT: "Medium to High",
                    MANAGEMENT: "Low", OVERALL: "Medium"},
        ),
        CalibrationTarget(
            name="case-4",
            answers=CASE_STUDY_ANSWERS["case-4"],
            expected={CORE_ASSET: 25.65, PRODUCT_DEVELOPMENT: 34.84,
                      MANAGEMENT: 17.5, OVERALL: 17.5},
            labels={CORE_ASSET: "Medium", PRODUCT_DEVELOPMENT: "Medium to High",
                    MANAGEMENT: "Low", OVERALL: "Low"},
        ),
    ]


def enumerate_trees(leaves: Sequence[str]) -> list[Tree]:
    """All full binary trees over the leaves in their given order.

    The count is the Catalan number C(n-1); n is capped at 8 to keep the
    space explicit and small.
    """
    n = len(leaves)
    if not 1 <= n <= 8:
        raise ValueError(f"leaf count {n} outside 1..8")
    if n == 1:
        return [leaves[0]]
    shapes: list[Tree] = []
    for split in range(1, n):
        for left in enumerate_trees(leaves[:split]):
            for right in enumerate_trees(leaves[split:]):
                shapes.append((left, right))
    return shapes


def _fold(values: Mapping[str, float], tree: Tree) -> float:
    if isinstance(tree, str):
        return values[tree]
    left, right = tree
    return evaluate_block(_fold(values, left), _fold(values, right))


# All behaviorally distinct three-leaf arrangements: blocks commute, so the
# only choice that matters is which pair is combined first.
FINAL_ARRANGEMENTS: tuple[Tree, ...] = (
    (("core", "product"), "management"),
    ("core", ("product", "management")),
    (("core", "management"), "product"),
)


def evaluate_config(
    config: AssessmentConfig, targets: Sequence[CalibrationTarget]
) -> tuple[float, dict[str, dict[str, float]]]:
    """Max absolute score error of a config over all targets, plus the breakdown."""
    matrix: dict[str, dict[str, float]] = {}
    residual = 0.0
    for target in targets:
        report = assess(Questionnaire(dict(target.answers)), config)
        errors = {
            activity: abs(report.activity(activity).score - expected)
            for activity, expected in target.expected.items()
        }
        matrix[target.name] = errors
        residual = max(residual, max(errors.values()))
    return residual, matrix


def calibrate(targets: Sequence[CalibrationTarget]) -> CalibrationResult:
    """Exhaustive search over all category shapes and final arrangements.

    Deterministic: ties within TIE_EPS of the minimal residual are all
    reported, in enumeration order.
    """
    if not targets:
        raise ValueError("no calibration targets")

    core_shapes = enumerate_trees(questions_in(CORE_ASSET))
    product_shapes = enumerate_trees(questions_in(PRODUCT_DEVELOPMENT))
    management_shapes = enumerate_trees(questions_in(MANAGEMENT))

    def category_scores(shapes: list[Tree]) -> list[list[float]]:
        return [[_fold(t.answers, shape) for t in targets] for shape in shapes]

    core_scores = category_scores(core_shapes)
    product_scores = category_scores(product_shapes)
    management_scores = category_scores(management_shapes)

    def category_residuals(scores: list[list[float]], activity: str) -> list[float]:
        return [
            max(abs(row[ti] - t.expected[activity]) for ti, t in enumerate(targets))
            for row in scores
        ]

    core_res = category_residuals(core_scores, CORE_ASSET)
    product_res = category_residuals(product_scores, PRODUCT_DEVELOPMENT)
    management_res = category_residuals(management_scores, MANAGEMENT)

    expected_overall = [t.expected[OVERALL] for t in targets]
    n_targets = len(targets)

    best = float("inf")
    candidates: list[tuple[float, int, int, int, int]] = []
    for fi, final in enumerate(FINAL_ARRANGEMENTS):
        for ci, cres in enumerate(core_res):
            for pi, pres in enumerate(product_res):
                base = cres if cres > pres else pres
                if base > best + TIE_EPS:
                    continue
                crow = core_scores[ci]
                prow = product_scores[pi]
                for mi, mres in enumerate(management_res):
                    r = base if base > mres else mres
                    if r > best + TIE_EPS:
                        continue
                    mrow = management_scores[mi]
                    for ti in range(n_targets):
                        overall = _fold(
                            {"core": crow[ti], "product": prow[ti], "management": mrow[ti]},
                            final,
                        )
                        err = abs(overall - expected_overall[ti])
                        if err > r:
                            r = err
                        if r > best + TIE_EPS:
                            break
                    if r <= best + TIE_EPS:
                        candidates.append((r, ci, pi, mi, fi))
                        if r < best:
                            best = r

    searched = len(core_shapes) * len(product_shapes) * len(management_shapes) * len(FINAL_ARRANGEMENTS)
    kept = [c for c in candidates if c[0] <= best + TIE_EPS]
    configs = []
    matrices = []
    for _, ci, pi, mi, fi in kept:
        cfg = AssessmentConfig(
            core=core_shapes[ci],
            product=product_shapes[pi],
            management=management_shapes[mi],
            final=FINAL_ARRANGEMENTS[fi],
        )
        configs.append(cfg)
        matrices.append(evaluate_config(cfg, targets)[1])
    return CalibrationResult(
        best_configs=tuple(configs),
        residual=best,
        residual_matrix=tuple(matrices),
        searched=searched,
    )
