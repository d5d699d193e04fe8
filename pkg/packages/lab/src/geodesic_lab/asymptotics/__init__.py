from .abel import abel_samples, abel_steps
from .classify import BOUNDED_SPREAD, R2_THRESHOLD, classify_growth, staircase_corners
from .preorder import DEFAULT_BOX, asymp_equivalent, preceq_fit, preceq_residual
from .sublinear import MIN_SAMPLES, is_sublinear_window, ratio_trend
from .types import (
    CoarseClass,
    ConstantBox,
    FitReport,
    FunctionSamples,
    GrowthClass,
    PreorderFit,
    WindowVerdict,
)

__all__ = [
    "abel_samples",
    "abel_steps",
    "asymp_equivalent",
    "BOUNDED_SPREAD",
    "classify_growth",
    "CoarseClass",
    "ConstantBox",
    "DEFAULT_BOX",
    "FitReport",
    "FunctionSamples",
    "GrowthClass",
    "is_sublinear_window",
    "MIN_SAMPLES",
    "preceq_fit",
    "preceq_residual",
    "PreorderFit",
    "R2_THRESHOLD",
    "ratio_trend",
    "staircase_corners",
    "WindowVerdict",
]
