from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any, Mapping, Sequence

import numpy as np

from ..core.errors import InvalidParamsError


class WindowVerdict(StrEnum):
    SUBLINEAR = "sublinear-on-window"
    NOT_SUBLINEAR = "not-sublinear-on-window"
    INCONCLUSIVE = "inconclusive"


class GrowthClass(StrEnum):
    BOUNDED = "bounded"
    LOGARITHMIC = "logarithmic"
    POWER = "power"
    LINEAR = "linear"
    SUPERLINEAR = "superlinear"
    INCONCLUSIVE = "inconclusive"


class CoarseClass(StrEnum):
    BOUNDED = "bounded"
    SUBLINEAR = "sublinear"
    LINEAR = "linear"
    SUPERLINEAR = "superlinear"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, slots=True)
class FunctionSamples:
    """Finite samples (r, f(r)) with r strictly increasing."""

    r: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.r:
            raise InvalidParamsError("function samples must be non-empty")
        if len(self.r) != len(self.values):
            raise InvalidParamsError("r and values differ in length")
        if any(b <= a for a, b in zip(self.r, self.r[1:])):
            raise InvalidParamsError("sample radii must be strictly increasing")
        if not all(math.isfinite(v) for v in self.values) or not all(
            math.isfinite(x) for x in self.r
        ):
            raise InvalidParamsError("function samples must be finite")

    @classmethod
    def of(cls, r: Sequence[float], values: Sequence[float]) -> "FunctionSamples":
        return cls(r=tuple(float(x) for x in r), values=tuple(float(v) for v in values))

    @classmethod
    def from_function(cls, fn: Any, r: Sequence[float]) -> "FunctionSamples":
        rr = np.asarray(r, dtype=np.float64)
        return cls.of(rr, fn.evaluate(rr))

    def __len__(self) -> int:
        return len(self.r)

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return np.asarray(self.r, dtype=np.float64), np.asarray(self.values, dtype=np.float64)

    def restrict(self, lo: float, hi: float) -> "FunctionSamples":
        pts = [(r, v) for r, v in zip(self.r, self.values) if lo <= r <= hi]
        return FunctionSamples.of([p[0] for p in pts], [p[1] for p in pts])

    def tail(self) -> "FunctionSamples":
        """Top half of the samples (the fit window)."""
        k = len(self.r) // 2
        return FunctionSamples(r=self.r[k:], values=self.values[k:])

    def running_max(self) -> "FunctionSamples":
        return FunctionSamples.of(self.r, np.maximum.accumulate(np.asarray(self.values)))

    def to_dict(self) -> dict[str, Any]:
        return {"r": list(self.r), "values": list(self.values)}


@dataclass(frozen=True, slots=True)
class ConstantBox:
    C1: tuple[float, ...] = (0.25, 0.5, 1.0, 2.0, 4.0, 8.0)
    C2: tuple[float, ...] = (0.25, 0.5, 1.0, 2.0, 4.0, 8.0)
    C3: tuple[float, ...] = (0.0, 1.0, 4.0, 16.0)
    C4: tuple[float, ...] = (0.0, 1.0, 4.0, 16.0)

    def __post_init__(self) -> None:
        for name in ("C1", "C2"):
            vals = getattr(self, name)
            if not vals or any(v <= 0 for v in vals):
                raise InvalidParamsError(f"{name} values must be positive")
        for name in ("C3", "C4"):
            vals = getattr(self, name)
            if not vals or any(v < 0 for v in vals):
                raise InvalidParamsError(f"{name} values must be non-negative")

    def to_dict(self) -> dict[str, list[float]]:
        return {
            "C1": list(self.C1),
            "C2": list(self.C2),
            "C3": list(self.C3),
            "C4": list(self.C4),
        }


@dataclass(frozen=True, slots=True)
class PreorderFit:
    """f(r) <= C1 * g(C2*r + C3) + C4 at every sample of f."""

    C1: float
    C2: float
    C3: float
    C4: float
    residual: float = 0.0

    @property
    def constants(self) -> tuple[float, float, float, float]:
        return (self.C1, self.C2, self.C3, self.C4)

    def bound(self, g: FunctionSamples, r: np.ndarray) -> np.ndarray:
        gr, gv = g.arrays()
        return self.C1 * np.interp(self.C2 * np.asarray(r) + self.C3, gr, gv) + self.C4

    def to_dict(self) -> dict[str, float]:
        return {
            "C1": self.C1,
            "C2": self.C2,
            "C3": self.C3,
            "C4": self.C4,
            "residual": self.residual,
        }


@dataclass(frozen=True, slots=True)
class FitReport:
    growth_class: GrowthClass
    window: tuple[float, float]
    exponent: float | None = None
    diagnostics: Mapping[str, Any] = field(default_factory=dict)
    # coarse class known without a fitted curve (window ratio test)
    coarse_hint: CoarseClass | None = None

    @property
    def coarse(self) -> CoarseClass:
        c = self.growth_class
        if c is GrowthClass.INCONCLUSIVE and self.coarse_hint is not None:
            return self.coarse_hint
        if c is GrowthClass.BOUNDED:
            return CoarseClass.BOUNDED
        if c is GrowthClass.LOGARITHMIC:
            return CoarseClass.SUBLINEAR
        if c is GrowthClass.LINEAR:
            return CoarseClass.LINEAR
        if c is GrowthClass.SUPERLINEAR:
            return CoarseClass.SUPERLINEAR
        if c is GrowthClass.POWER and self.exponent is not None:
            if self.exponent < 0.9:
                return CoarseClass.SUBLINEAR
            if self.exponent > 1.1:
                return CoarseClass.SUPERLINEAR
            return CoarseClass.LINEAR
        return CoarseClass.INCONCLUSIVE

    @property
    def label(self) -> str:
        if self.growth_class is GrowthClass.POWER and self.exponent is not None:
            return f"power({self.exponent:.3g})"
        if self.growth_class is GrowthClass.INCONCLUSIVE and self.coarse_hint is not None:
            return f"inconclusive ({self.coarse_hint.value} on window)"
        return self.growth_class.value

    def to_dict(self) -> dict[str, Any]:
        return {
            "class": self.growth_class.value,
            "label": self.label,
            "coarse": self.coarse.value,
            "exponent": self.exponent,
            "window": list(self.window),
            "diagnostics": dict(self.diagnostics),
        }
