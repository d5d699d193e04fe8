from .profile import (
    admissible_s,
    default_s_grid,
    divergence_profile,
    divergence_r_grid,
    forbidden_ball,
    lambda_detour,
    lambda_divergence,
)
from .robustness import compare_divergence, parameter_robustness_check
from .superlinear import SUPERLINEAR_HORIZON, completely_superlinear_test
from .types import (
    DivergenceParams,
    DivergenceProfile,
    DivergenceSample,
    RobustnessReport,
    RobustnessVerdict,
    SuperlinearReport,
    SuperlinearVerdict,
)

__all__ = [
    "admissible_s",
    "compare_divergence",
    "completely_superlinear_test",
    "default_s_grid",
    "DivergenceParams",
    "DivergenceProfile",
    "divergence_profile",
    "divergence_r_grid",
    "DivergenceSample",
    "forbidden_ball",
    "lambda_detour",
    "lambda_divergence",
    "parameter_robustness_check",
    "RobustnessReport",
    "RobustnessVerdict",
    "SUPERLINEAR_HORIZON",
    "SuperlinearReport",
    "SuperlinearVerdict",
]
