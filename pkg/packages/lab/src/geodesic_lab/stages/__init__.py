from .generate import stage_generate
from .plot import stage_plot
from .profile import PROFILE_KINDS, stage_profile
from .verify import stage_verify

__all__ = [
    "PROFILE_KINDS",
    "stage_generate",
    "stage_plot",
    "stage_profile",
    "stage_verify",
]
