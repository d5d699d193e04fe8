from __future__ import annotations

import numpy as np

from .types import FunctionSamples, WindowVerdict

MIN_SAMPLES = 8
SUBLINEAR_RATIO = 0.5
NOT_SUBLINEAR_RATIO = 0.9


def half_window_means(r: np.ndarray, ratio: np.ndarray) -> tuple[float, float]:
    """Mean of `ratio` over the lower and the upper half of the samples."""
    k = len(r) // 2
    return float(np.mean(ratio[:k])), float(np.mean(ratio[k:]))


def ratio_trend(
    r: np.ndarray,
    ratio: np.ndarray,
    *,
    shrink: float = SUBLINEAR_RATIO,
    hold: float = NOT_SUBLINEAR_RATIO,
) -> tuple[WindowVerdict, dict[str, float]]:
    """
    Decide whether `ratio` tends to 0 across the window.

    Tends to 0: upper-half mean < shrink * lower-half mean, or upper mean is 0.
    Does not: upper-half mean >= hold * lower-half mean.
    """
    lo_mean, hi_mean = half_window_means(r, ratio)
    diag = {"lower_mean": lo_mean, "upper_mean": hi_mean}
    if hi_mean == 0.0 or hi_mean < shrink * lo_mean:
        return WindowVerdict.SUBLINEAR, diag
    if hi_mean >= hold * lo_mean:
        return WindowVerdict.NOT_SUBLINEAR, diag
    return WindowVerdict.INCONCLUSIVE, diag


def is_sublinear_window(
    f: FunctionSamples,
    *,
    shrink: float = SUBLINEAR_RATIO,
    hold: float = NOT_SUBLINEAR_RATIO,
    min_samples: int = MIN_SAMPLES,
) -> WindowVerdict:
    r, v = f.arrays()
    pos = r > 0
    r, v = r[pos], v[pos]
    if r.size < min_samples:
        return WindowVerdict.INCONCLUSIVE
    verdict, _ = ratio_trend(r, v / r, shrink=shrink, hold=hold)
    return verdict
