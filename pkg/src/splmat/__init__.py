"""Fuzzy-inference maturity scoring for software product line processes.

Converts 17 questionnaire answers (0..50 each) into maturity scores,
linguistic labels, and 1..5 levels for core-asset development, product
development, management, and the overall process, through a cascade of
two-input Mamdani min-max-min blocks with centroid defuzzification.
"""

__version__ = "0.1.0"

from .assessment import (
    ACTIVITIES,
    QUESTIONS,
    AssessmentConfig,
    AssessmentReport,
    Questionnaire,
    ValidationError,
    assess,
    average_respondents,
    default_config,
    label_of,
    level_of,
    report_to_json,
    validate,
    whatif,
)
from .calibration import (
    CASE_STUDY_ANSWERS,
    CalibrationResult,
    CalibrationTarget,
    calibrate,
    case_study_targets,
    enumerate_trees,
)
from .fuzzy import (
    EmptySetError,
    LinguisticVariable,
    PiecewiseLinearSet,
    Trapezoid,
    centroid,
    clip,
    make_input_variable,
    make_output_variable,
    trapezoid_membership,
    union,
)
from .reliability import (
    EigenReport,
    ResponseMatrix,
    ZeroVarianceError,
    cronbach_alpha,
    correlation_matrix,
    eigenvalues_symmetric,
    kaiser_retained,
)
from .rules import (
    FiringRecord,
    Rule,
    RuleBase,
    default_rule_base,
    evaluate_block,
    firing_strength,
    infer,
)

__all__ = [
    "ACTIVITIES",
    "CASE_STUDY_ANSWERS",
    "AssessmentConfig",
    "AssessmentReport",
    "CalibrationResult",
    "CalibrationTarget",
    "EigenReport",
    "EmptySetError",
    "FiringRecord",
    "LinguisticVariable",
    "PiecewiseLinearSet",
    "QUESTIONS",
    "Questionnaire",
    "ResponseMatrix",
    "Rule",
    "RuleBase",
    "Trapezoid",
    "ValidationError",
    "ZeroVarianceError",
    "assess",
    "average_respondents",
    "calibrate",
    "case_study_targets",
    "centroid",
    "clip",
    "correlation_matrix",
    "cronbach_alpha",
    "default_config",
    "default_rule_base",
    "eigenvalues_symmetric",
    "enumerate_trees",
    "evaluate_block",
    "firing_strength",
    "infer",
    "kaiser_retained",
    "label_of",
    "level_of",
    "make_input_variable",
    "make_output_variable",
    "report_to_json",
    "trapezoid_membership",
    "union",
    "validate",
    "whatif",
]
