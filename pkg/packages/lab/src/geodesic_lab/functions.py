"""
Real functions used as contraction, Morse and divergence parameters.

A FunctionSpec is either symbolic (parsed from a short text form such as
``pow:0.5`` or ``affsqrt:2,-1``) or sampled (piecewise linear through given
points, constant outside them). Both evaluate on scalars and numpy arrays.

Text forms:

    id                  r
    const:c             c
    lin:a[,b]           a*r + b
    pow:k[,c]           c * r**k              (r <= 0 -> 0)
    sqrt                sqrt(r)
    ceilsqrt            ceil(sqrt(r))
    affsqrt:a,b         a*sqrt(r) + b
    log:base[,c]        max(0, c * log_base(r))
    minlog2             min(r, r - log2(r))
    sampled:x=y,...     piecewise linear, clamped at both ends
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np
from scipy.optimize import bisect

from .core.errors import InvalidFunctionError, InvalidParamsError

BISECT_XTOL = 1e-9
_MAX_BRACKET = 1e300

_ARITY: dict[str, tuple[int, int]] = {
    "id": (0, 0),
    "const": (1, 1),
    "lin": (1, 2),
    "pow": (1, 2),
    "sqrt": (0, 0),
    "ceilsqrt": (0, 0),
    "affsqrt": (2, 2),
    "log": (1, 2),
    "minlog2": (0, 0),
}


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _safe_sqrt(r: np.ndarray) -> np.ndarray:
    return np.sqrt(np.clip(r, 0.0, None))


@dataclass(frozen=True, slots=True)
class FunctionSpec:
    kind: str
    params: tuple[float, ...] = ()
    xs: tuple[float, ...] = ()
    ys: tuple[float, ...] = ()
    _fn: Callable[[np.ndarray], np.ndarray] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "_fn", self._build())

    # construction

    @classmethod
    def parse(cls, text: str) -> "FunctionSpec":
        raw = (text or "").strip()
        if not raw:
            raise InvalidFunctionError("empty function spec")
        kind, _, rest = raw.partition(":")
        kind = kind.strip().lower()

        if kind == "sampled":
            pts: list[tuple[float, float]] = []
            for item in rest.split(","):
                if not item.strip():
                    continue
                x, sep, y = item.partition("=")
                if not sep:
                    raise InvalidFunctionError(f"bad sampled point {item!r}")
                try:
                    pts.append((float(x), float(y)))
                except ValueError as e:
                    raise InvalidFunctionError(f"bad sampled point {item!r}") from e
            return cls.sampled([p[0] for p in pts], [p[1] for p in pts])

        if kind not in _ARITY:
            raise InvalidFunctionError(f"unknown function kind {kind!r} in {raw!r}")
        lo, hi = _ARITY[kind]
        parts = [p.strip() for p in rest.split(",")] if rest.strip() else []
        if not lo <= len(parts) <= hi:
            raise InvalidFunctionError(
                f"{kind!r} takes {lo}..{hi} parameters, got {len(parts)} in {raw!r}"
            )
        try:
            params = tuple(float(p) for p in parts)
        except ValueError as e:
            raise InvalidFunctionError(f"non-numeric parameter in {raw!r}") from e
        if any(not math.isfinite(p) for p in params):
            raise InvalidFunctionError(f"non-finite parameter in {raw!r}")
        if kind == "log" and (params[0] <= 0 or params[0] == 1):
            raise InvalidFunctionError(f"log base must be positive and != 1: {raw!r}")
        return cls(kind=kind, params=params)

    @classmethod
    def sampled(cls, xs: Sequence[float], ys: Sequence[float]) -> "FunctionSpec":
        x = np.asarray(xs, dtype=np.float64)
        y = np.asarray(ys, dtype=np.float64)
        if x.size == 0 or x.shape != y.shape:
            raise InvalidFunctionError("sampled function needs matching non-empty xs/ys")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise InvalidFunctionError("sampled function values must be finite")
        if np.any(np.diff(x) <= 0):
            raise InvalidFunctionError("sampled xs must be strictly increasing")
        return cls(
            kind="sampled",
            xs=tuple(float(v) for v in x),
            ys=tuple(float(v) for v in y),
        )

    @classmethod
    def identity(cls) -> "FunctionSpec":
        return cls(kind="id")

    @classmethod
    def constant(cls, c: float) -> "FunctionSpec":
        return cls(kind="const", params=(float(c),))

    @classmethod
    def linear(cls, a: float, b: float = 0.0) -> "FunctionSpec":
        return cls(kind="lin", params=(float(a), float(b)))

    def _build(self) -> Callable[[np.ndarray], np.ndarray]:
        k, p = self.kind, self.params
        if k == "id":
            return lambda r: r
        if k == "const":
            return lambda r: np.full_like(r, p[0])
        if k == "lin":
            b = p[1] if len(p) > 1 else 0.0
            return lambda r: p[0] * r + b
        if k == "pow":
            c = p[1] if len(p) > 1 else 1.0
            return lambda r: c * np.power(np.clip(r, 0.0, None), p[0])
        if k == "sqrt":
            return _safe_sqrt
        if k == "ceilsqrt":
            # the small offset keeps exact squares from rounding up
            return lambda r: np.ceil(_safe_sqrt(r) - 1e-12)
        if k == "affsqrt":
            return lambda r: p[0] * _safe_sqrt(r) + p[1]
        if k == "log":
            c = p[1] if len(p) > 1 else 1.0
            ln_base = math.log(p[0])

            def _log(r: np.ndarray) -> np.ndarray:
                out = np.zeros_like(r)
                pos = r > 0
                out[pos] = c * np.log(r[pos]) / ln_base
                return np.clip(out, 0.0, None)

            return _log
        if k == "minlog2":

            def _minlog2(r: np.ndarray) -> np.ndarray:
                out = r.copy()
                pos = r > 1
                out[pos] = r[pos] - np.log2(r[pos])
                return out

            return _minlog2
        if k == "sampled":
            xs = np.asarray(self.xs, dtype=np.float64)
            ys = np.asarray(self.ys, dtype=np.float64)
            return lambda r: np.interp(r, xs, ys)
        raise InvalidFunctionError(f"unknown function kind {k!r}")

    # evaluation

    def __call__(self, r: float) -> float:
        return float(self._fn(np.asarray([r], dtype=np.float64))[0])

    def evaluate(self, r: Sequence[float] | np.ndarray) -> np.ndarray:
        arr = np.asarray(r, dtype=np.float64)
        flat = np.atleast_1d(arr).astype(np.float64, copy=True)
        return np.asarray(self._fn(flat), dtype=np.float64).reshape(arr.shape)

    def inverse(
        self, y: float, *, lo: float, hi: float | None = None, xtol: float = BISECT_XTOL
    ) -> float:
        """
        Smallest x >= lo with f(x) >= y, for f non-decreasing on [lo, inf).

        When `hi` is omitted the bracket is doubled until it contains y.
        """
        if self(lo) >= y:
            return float(lo)
        if hi is None:
            hi = max(2.0 * abs(lo), 1.0) + lo
            while self(hi) < y:
                hi = lo + 2.0 * (hi - lo)
                if hi > _MAX_BRACKET:
                    raise InvalidParamsError(
                        f"{self.to_text()} never reaches {y} below {_MAX_BRACKET:g}"
                    )
        elif self(hi) < y:
            raise InvalidParamsError(f"{self.to_text()} does not reach {y} on [{lo}, {hi}]")
        x = float(bisect(lambda t: self(t) - y, lo, hi, xtol=xtol))
        # bisect lands within xtol of the root; keep the side where f >= y
        if self(x) < y:
            x = min(x + xtol, hi)
        return x

    def constant_value(self) -> float | None:
        if self.kind == "const":
            return self.params[0]
        if self.kind == "lin" and self.params[0] == 0.0:
            return self.params[1] if len(self.params) > 1 else 0.0
        if self.kind == "sampled" and len(set(self.ys)) == 1:
            return self.ys[0]
        return None

    def to_text(self) -> str:
        if self.kind == "sampled":
            pts = ",".join(f"{_fmt(x)}={_fmt(y)}" for x, y in zip(self.xs, self.ys))
            return f"sampled:{pts}"
        if not self.params:
            return self.kind
        return f"{self.kind}:" + ",".join(_fmt(p) for p in self.params)

    def to_dict(self) -> dict[str, Any]:
        return {"function": self.to_text()}

    def __str__(self) -> str:
        return self.to_text()


def as_function(value: "FunctionSpec | str") -> FunctionSpec:
    return value if isinstance(value, FunctionSpec) else FunctionSpec.parse(value)


def check_non_decreasing(
    f: FunctionSpec, grid: np.ndarray, *, name: str, atol: float = 1e-12
) -> None:
    v = f.evaluate(grid)
    bad = np.flatnonzero(np.diff(v) < -atol)
    if bad.size:
        i = int(bad[0])
        raise InvalidFunctionError(
            f"{name}={f} decreases between r={grid[i]:g} and r={grid[i + 1]:g}"
        )


def check_below_identity(
    f: FunctionSpec, grid: np.ndarray, *, name: str, atol: float = 1e-12
) -> None:
    v = f.evaluate(grid)
    bad = np.flatnonzero(v > grid + atol)
    if bad.size:
        i = int(bad[0])
        raise InvalidFunctionError(f"{name}={f} exceeds r at r={grid[i]:g}")


@dataclass(frozen=True, slots=True)
class MorseFunctionSpec:
    """
    mu(L, A) = in_L(L) + a_slope * A, non-decreasing in L.

    Symbolic when `in_L` is symbolic; a sampled `in_L` is how empirical
    detour profiles are fed back into the bound calculators.
    """

    in_L: FunctionSpec
    a_slope: float = 0.0

    def __post_init__(self) -> None:
        if self.a_slope < 0 or not math.isfinite(self.a_slope):
            raise InvalidFunctionError("mu A-slope must be finite and >= 0")
        grid = self.validation_grid()
        if np.any(self.in_L.evaluate(grid) < -1e-12):
            raise InvalidFunctionError(f"mu={self.in_L} is negative on L >= 1")
        check_non_decreasing(self.in_L, grid, name="mu")

    @classmethod
    def parse(cls, text: str, *, a_slope: float = 0.0) -> "MorseFunctionSpec":
        return cls(in_L=FunctionSpec.parse(text), a_slope=a_slope)

    @staticmethod
    def validation_grid() -> np.ndarray:
        return np.geomspace(1.0, 1e6, 241)

    def __call__(self, L: float, A: float = 0.0) -> float:
        return self.in_L(L) + self.a_slope * A

    def to_text(self) -> str:
        if self.a_slope:
            return f"{self.in_L.to_text()};A*{_fmt(self.a_slope)}"
        return self.in_L.to_text()
