from __future__ import annotations

import math

import numpy as np
from scipy.optimize import bisect

from ..core.errors import InvalidFunctionError, InvalidParamsError
from ..core.logging import get_logger
from ..functions import BISECT_XTOL, FunctionSpec, check_below_identity, check_non_decreasing
from .types import AbelData

log = get_logger(__name__)

_STEP_SIZES = np.array([0.25, 0.5, 1.0, 2.0, 4.0, 16.0, 64.0, 1024.0])
_FLOAT_CEILING = 1e300


def validation_grid(A: float, *, points: int = 257) -> np.ndarray:
    hi = max(A * 2.0**20, 1e6)
    return np.unique(np.concatenate([[A], np.geomspace(max(A, 1e-6), hi, points)]))


def validate_abel_hypotheses(rho: FunctionSpec, A: float) -> None:
    """
    Check on a sample grid of [A, inf) that rho is usable for the Abel trade:
    non-decreasing, below the identity, rho(A) > 0, growing, and
    0 <= rho(a+b) - rho(a) < b.
    """
    if not (math.isfinite(A) and A > 0):
        raise InvalidFunctionError(f"A must be positive, got {A}")
    if not rho(A) > 0:
        raise InvalidFunctionError(f"rho(A) must be > 0, got rho({A:g}) = {rho(A):g}")

    grid = validation_grid(A)
    check_non_decreasing(rho, grid, name="rho")
    check_below_identity(rho, grid, name="rho")
    if not rho(grid[-1]) > rho(A):
        raise InvalidFunctionError(f"rho={rho} does not grow on [{A:g}, {grid[-1]:g}]")

    a = grid[:, None]
    b = _STEP_SIZES[None, :]
    inc = rho.evaluate(a + b) - rho.evaluate(a)
    bad = (inc < -1e-12) | (inc >= b * (1.0 - 1e-12))
    if bad.any():
        i, j = (int(k) for k in np.argwhere(bad)[0])
        raise InvalidFunctionError(
            f"rho={rho} breaks 0 <= rho(a+b) - rho(a) < b at a={grid[i]:g}, b={_STEP_SIZES[j]:g}"
        )


def phi(rho: FunctionSpec, x: float) -> float:
    return x - rho(x)


def phi_inverse(rho: FunctionSpec, A: float, y: float, *, xtol: float = BISECT_XTOL) -> float:
    """
    The x >= A with x - rho(x) = y, found by monotone bisection.

    Results within tolerance of an integer are snapped onto it so that exact
    towers (2^i, i^2, ...) come out exact.
    """
    lo = max(float(y), float(A))
    if phi(rho, lo) >= y:
        return lo
    hi = lo + max(1.0, lo)
    while phi(rho, hi) < y:
        hi = lo + 2.0 * (hi - lo)
        if hi > _FLOAT_CEILING:
            raise InvalidParamsError(f"inverse of x - rho(x) at {y:g} exceeds float range")
    x = float(bisect(lambda t: phi(rho, t) - y, lo, hi, xtol=xtol))
    k = round(x)
    if abs(k - x) <= max(xtol, 1e-12 * abs(x)) * 2 and abs(phi(rho, k) - y) <= abs(
        phi(rho, x) - y
    ):
        return float(k)
    return x


def sigma_sequence(rho: FunctionSpec, A: float, n: int) -> AbelData:
    if n < 0:
        raise InvalidParamsError(f"n must be >= 0, got {n}")
    validate_abel_hypotheses(rho, A)

    a_prime = float(A - rho(A))
    sigma = [a_prime]
    for i in range(n):
        sigma.append(phi_inverse(rho, A, sigma[-1]))
    log.debug("sigma sequence", rho=rho.to_text(), A=A, n=n, last=sigma[-1])
    return AbelData(rho=rho, A=float(A), A_prime=a_prime, sigma=tuple(sigma))
