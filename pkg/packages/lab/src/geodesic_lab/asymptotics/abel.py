from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..core.errors import InvalidParamsError, OutOfDomainError
from ..functions import FunctionSpec
from ..spaces.abel import validate_abel_hypotheses
from .types import FunctionSamples

_MAX_STEPS = 10_000_000
_TOL = 1e-9


@lru_cache(maxsize=64)
def _validated(rho: FunctionSpec, A: float) -> float:
    validate_abel_hypotheses(rho, A)
    return float(A - rho(A))


def abel_steps(rho: FunctionSpec, A: float, x: float) -> int:
    """
    Number of applications of x -> x - rho(x) that bring x into [A', A),
    where A' = A - rho(A).
    """
    a_prime = _validated(rho, float(A))
    if x < a_prime - _TOL:
        raise OutOfDomainError(f"x={x:g} is below A'={a_prime:g}")
    n = 0
    # the input is taken at face value; iterates get the bisection slack
    edge = float(A)
    while x >= edge:
        x = x - rho(x)
        n += 1
        edge = A - _TOL
        if n > _MAX_STEPS:
            raise InvalidParamsError(f"abel iteration did not settle after {_MAX_STEPS} steps")
    return n


def abel_samples(rho: FunctionSpec, A: float, r: Sequence[float]) -> FunctionSamples:
    """abel_steps on a radius grid, for comparison with contraction profiles."""
    return FunctionSamples.of(r, [float(abel_steps(rho, A, x)) for x in r])
