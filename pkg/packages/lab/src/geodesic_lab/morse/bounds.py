from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy.optimize import bisect

from ..core.errors import InvalidParamsError, NotVerifiableError
from ..functions import BISECT_XTOL, FunctionSpec, MorseFunctionSpec, as_function
from .types import MorseBoundReport


def _tail_start(ok: np.ndarray) -> int | None:
    """First index from which `ok` holds through the end of the grid."""
    if not ok.size or not ok[-1]:
        return None
    bad = np.flatnonzero(~ok)
    return int(bad[-1]) + 1 if bad.size else 0


def morse_bound_from_contraction(
    rho1: FunctionSpec | str,
    rho2: FunctionSpec | str,
    eps: float,
    L: float,
    A: float,
    sample_grid: Sequence[float],
) -> MorseBoundReport:
    """
    Morse bound of a (rho1, rho2)-contracting subspace for (L, A)-quasi-geodesics.

    E is the smallest grid point from which rho1 > 0 and rho2/rho1 < 1/(3L^2)
    hold on the rest of the grid, and which also has rho1(E) > 3A. Then

        d = E/L^2 + A + 4(E + eps),  T = L*d + L*A,  B = E + L*T/2 + A.
    """
    rho1, rho2 = as_function(rho1), as_function(rho2)
    if not L >= 1:
        raise InvalidParamsError(f"L must be >= 1, got {L}")
    if eps < 0 or A < 0:
        raise InvalidParamsError("eps and A must be >= 0")
    grid = np.unique(np.asarray(sample_grid, dtype=np.float64))
    if not grid.size or grid[0] < 0:
        raise InvalidParamsError("sample grid must be non-empty and non-negative")

    r1 = rho1.evaluate(grid)
    r2 = rho2.evaluate(grid)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio_ok = (r1 > 0) & (r2 < r1 / (3.0 * L * L))
    start = _tail_start(ratio_ok)
    if start is not None:
        later = np.flatnonzero(r1[start:] > 3.0 * A)
        start = start + int(later[0]) if later.size else None
    if start is None:
        raise NotVerifiableError(
            f"rho2/rho1 < 1/(3L^2) with rho1 > 3A never holds to the end of the grid "
            f"[{grid[0]:g}, {grid[-1]:g}]"
        )

    E = float(grid[start])
    d_bound = E / (L * L) + A + 4.0 * (E + eps)
    T = L * d_bound + L * A
    B = E + L * T / 2.0 + A
    return MorseBoundReport(
        E=E,
        d_bound=d_bound,
        T=T,
        B=B,
        inputs={
            "rho1": rho1.to_text(),
            "rho2": rho2.to_text(),
            "eps": float(eps),
            "L": float(L),
            "A": float(A),
            "grid": [float(grid[0]), float(grid[-1]), int(grid.size)],
        },
    )


def contraction_bound_from_morse(
    mu: MorseFunctionSpec | str, eps: float, r: float, *, xtol: float = BISECT_XTOL
) -> float:
    """
    rho'(r) = sup{ s <= M : s <= 18*mu(3M/s) + 12*eps },  M = 4r + 2*eps.

    rho'(0) = 2*eps. The right-hand side is non-increasing in s, so the
    supremum is the crossing point found by bisection.
    """
    if not isinstance(mu, MorseFunctionSpec):
        mu = MorseFunctionSpec.parse(mu)
    if eps < 0 or r < 0:
        raise InvalidParamsError("eps and r must be >= 0")
    if r == 0:
        return 2.0 * eps
    M = 4.0 * r + 2.0 * eps
    c = mu.in_L.constant_value()
    if c is not None:
        return min(M, 18.0 * c + 12.0 * eps)

    def gap(s: float) -> float:
        return 18.0 * mu(3.0 * M / s) + 12.0 * eps - s

    if gap(M) >= 0:
        return M
    lo = M * 1e-12
    if gap(lo) < 0:
        return 0.0
    s = float(bisect(gap, lo, M, xtol=xtol * max(1.0, M)))
    return s if gap(s) >= 0 else max(lo, s - xtol * max(1.0, M))
