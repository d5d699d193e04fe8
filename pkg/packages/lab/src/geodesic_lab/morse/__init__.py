from .bounds import contraction_bound_from_morse, morse_bound_from_contraction
from .detour import (
    classify_morse,
    detour_bound,
    endpoint_pairs,
    morse_profile,
    morse_separation_profile,
)
from .shortcut import degradation, shortcut_quasigeodesify, shortcut_report
from .types import DetourWitness, MorseBoundReport, MorseVerdict, PairPlan, ShortcutResult

__all__ = [
    "DetourWitness",
    "MorseBoundReport",
    "MorseVerdict",
    "PairPlan",
    "ShortcutResult",
    "classify_morse",
    "contraction_bound_from_morse",
    "degradation",
    "detour_bound",
    "endpoint_pairs",
    "morse_bound_from_contraction",
    "morse_profile",
    "morse_separation_profile",
    "shortcut_quasigeodesify",
    "shortcut_report",
]
