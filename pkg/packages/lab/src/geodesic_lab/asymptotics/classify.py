from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core.logging import get_logger
from .sublinear import MIN_SAMPLES, ratio_trend
from .types import CoarseClass, FitReport, FunctionSamples, GrowthClass, WindowVerdict

log = get_logger(__name__)

R2_THRESHOLD = 0.95
BOUNDED_SPREAD = 0.05
# staircase jumps needed before the envelope fit is trusted
MIN_CORNERS = 4


@dataclass(frozen=True, slots=True)
class _LineFit:
    slope: float
    intercept: float
    r2: float

    def to_dict(self) -> dict[str, float]:
        return {"slope": self.slope, "intercept": self.intercept, "r2": self.r2}


def _line_fit(x: np.ndarray, y: np.ndarray) -> _LineFit:
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_res = float(np.sum(resid**2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0.0:
        r2 = 1.0 if ss_res == 0.0 else 0.0
    else:
        r2 = 1.0 - ss_res / ss_tot
    return _LineFit(slope=float(slope), intercept=float(intercept), r2=r2)


def staircase_corners(r: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """First sample of every new positive value: where a step profile jumps."""
    keep = np.zeros(r.size, dtype=bool)
    keep[1:] = v[1:] != v[:-1]
    keep[0] = True
    keep &= v > 0
    return r[keep], v[keep]


def _fit_window(
    r: np.ndarray, v: np.ndarray, r2_threshold: float, diag: dict[str, object]
) -> tuple[GrowthClass, float | None]:
    lnr = np.log(r)
    log_fit = _line_fit(lnr, v)
    diag["log"] = log_fit.to_dict()
    log_ok = log_fit.r2 >= r2_threshold and log_fit.slope > 0

    power_fit: _LineFit | None = None
    exp_fit: _LineFit | None = None
    if np.all(v > 0):
        lnv = np.log(v)
        power_fit = _line_fit(lnr, lnv)
        exp_fit = _line_fit(r, lnv)
        diag["power"] = power_fit.to_dict()
        diag["exp"] = exp_fit.to_dict()
    exp_ok = exp_fit is not None and exp_fit.r2 >= r2_threshold

    if power_fit is not None and power_fit.r2 >= r2_threshold:
        alpha = power_fit.slope
        if 0.9 <= alpha <= 1.1:
            return GrowthClass.LINEAR, alpha
        if alpha > 1.1:
            if exp_ok and exp_fit is not None and exp_fit.r2 > power_fit.r2:
                return GrowthClass.SUPERLINEAR, alpha
            return GrowthClass.POWER, alpha
        # slow growth: a power law with a tiny exponent is a logarithm in disguise
        if log_ok and (log_fit.r2 > power_fit.r2 or alpha < 0.25):
            return GrowthClass.LOGARITHMIC, alpha
        return GrowthClass.POWER, alpha
    if log_ok:
        return GrowthClass.LOGARITHMIC, None
    if exp_ok:
        return GrowthClass.SUPERLINEAR, None
    return GrowthClass.INCONCLUSIVE, None


def classify_growth(
    f: FunctionSamples,
    *,
    r2_threshold: float = R2_THRESHOLD,
    bounded_spread: float = BOUNDED_SPREAD,
    min_samples: int = MIN_SAMPLES,
) -> FitReport:
    """
    Growth class of sampled values on the top half of the samples.

    bounded      constant samples, or spread <= bounded_spread * max on the window
    logarithmic  v ~ a + b*ln r fits, and beats or dominates a flat power fit
    linear       ln v ~ alpha*ln r with alpha in [0.9, 1.1]
    power        ln v ~ alpha*ln r otherwise
    superlinear  ln v ~ k*r beats the power fit, with alpha > 1.1

    Every fit must reach R^2 >= r2_threshold to count. A step profile that
    fails on the window is refitted on its jump points; if that fails too,
    the window ratio test may still pin the coarse class to sublinear.
    """
    r_all, v_all = f.arrays()
    pos = r_all > 0
    r_all, v_all = r_all[pos], v_all[pos]
    if r_all.size and float(np.ptp(v_all)) == 0.0:
        return FitReport(
            GrowthClass.BOUNDED,
            window=(float(r_all[0]), float(r_all[-1])),
            diagnostics={"reason": "constant", "samples": int(r_all.size)},
        )
    if r_all.size < min_samples:
        return FitReport(
            GrowthClass.INCONCLUSIVE,
            window=(float(f.r[0]), float(f.r[-1])),
            diagnostics={"reason": "too-few-samples", "samples": int(r_all.size)},
        )

    k = r_all.size // 2
    r, v = r_all[k:], v_all[k:]
    window = (float(r[0]), float(r[-1]))
    vmax = float(np.abs(v).max())
    spread = float(v.max() - v.min())
    diag: dict[str, object] = {"spread": spread, "max": vmax, "samples": int(r.size)}

    if vmax == 0.0 or spread <= bounded_spread * vmax:
        return FitReport(GrowthClass.BOUNDED, window=window, diagnostics=diag)

    growth, exponent = _fit_window(r, v, r2_threshold, diag)
    if growth is not GrowthClass.INCONCLUSIVE:
        return FitReport(growth, window, exponent=exponent, diagnostics=diag)

    cr, cv = staircase_corners(r_all, v_all)
    if cr.size >= MIN_CORNERS:
        corner_diag: dict[str, object] = {"corners": int(cr.size)}
        growth, exponent = _fit_window(cr, cv, r2_threshold, corner_diag)
        diag["staircase"] = corner_diag
        if growth is not GrowthClass.INCONCLUSIVE:
            return FitReport(growth, window, exponent=exponent, diagnostics=diag)

    verdict, ratio_diag = ratio_trend(r_all, v_all / r_all)
    diag["ratio"] = {"verdict": verdict.value, **ratio_diag}
    log.debug("growth inconclusive", window=window, spread=spread, ratio=verdict.value)
    hint = CoarseClass.SUBLINEAR if verdict is WindowVerdict.SUBLINEAR else None
    return FitReport(GrowthClass.INCONCLUSIVE, window, diagnostics=diag, coarse_hint=hint)
