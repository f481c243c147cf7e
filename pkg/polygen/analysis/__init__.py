from polygen.analysis.conditions import (
    PeriodicityConditionReport,
    example4_condition_check,
)
from polygen.analysis.distance import set_distance, set_distance_curve
from polygen.analysis.periods import PeriodReport, detect_period
from polygen.analysis.taxonomy import (
    ModulusMarker,
    TaxonomyReport,
    classify_parameters,
    predicted_period,
)

__all__ = [
    "ModulusMarker",
    "PeriodReport",
    "PeriodicityConditionReport",
    "TaxonomyReport",
    "classify_parameters",
    "detect_period",
    "example4_condition_check",
    "predicted_period",
    "set_distance",
    "set_distance_curve",
]
