from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any, Iterator

from ..asymptotics import FitReport, FunctionSamples, PreorderFit
from ..core.errors import InvalidParamsError
from ..metric import ParamPath


@dataclass(frozen=True, slots=True)
class DivergenceParams:
    """
    Quasi-geodesic constants of gamma (L, A) plus the avoidance ball shape:
    the ball around gamma(s) has radius lam * (r / L - A) - kappa.
    """

    L: float = 1.0
    A: float = 0.0
    lam: float = 0.5
    kappa: float = 2.0

    def __post_init__(self) -> None:
        for name in ("L", "A", "lam", "kappa"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParamsError(f"{name} must be finite")
        if self.L < 1:
            raise InvalidParamsError(f"L must be >= 1, got {self.L}")
        if self.A < 0:
            raise InvalidParamsError(f"A must be >= 0, got {self.A}")
        if not 0 < self.lam <= 1:
            raise InvalidParamsError(f"lambda must be in (0, 1], got {self.lam}")
        if self.kappa < self.L + self.A:
            raise InvalidParamsError(
                f"kappa must be >= L + A = {self.L + self.A:g}, got {self.kappa}"
            )

    @classmethod
    def parse(cls, text: str) -> "DivergenceParams":
        """`L,A,lambda,kappa`, e.g. ``1,0,0.5,2``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise InvalidParamsError(f"expected L,A,lambda,kappa, got {text!r}")
        try:
            L, A, lam, kappa = (float(p) for p in parts)
        except ValueError as e:
            raise InvalidParamsError(f"non-numeric divergence params {text!r}") from e
        return cls(L=L, A=A, lam=lam, kappa=kappa)

    def forbidden_radius(self, r: float) -> float:
        return self.lam * (r / self.L - self.A) - self.kappa

    def to_text(self) -> str:
        return ",".join(format(v, ".12g") for v in (self.L, self.A, self.lam, self.kappa))

    def to_dict(self) -> dict[str, float]:
        return {"L": self.L, "A": self.A, "lambda": self.lam, "kappa": self.kappa}


@dataclass(frozen=True, slots=True)
class DivergenceSample:
    """Best detour at radius r; value None means no admissible detour at any s."""

    r: float
    value: float | None
    s: float | None = None
    path: ParamPath | None = None

    @property
    def is_infinite(self) -> bool:
        return self.value is None


@dataclass(frozen=True, slots=True)
class DivergenceProfile:
    samples: tuple[DivergenceSample, ...]
    params: DivergenceParams
    s_grid: tuple[float, ...]
    valid_radius: float
    gamma_ref: str = "gamma"
    meta: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        rs = [s.r for s in self.samples]
        if any(b <= a for a, b in zip(rs, rs[1:])):
            raise InvalidParamsError("profile radii must be strictly increasing")

    def __iter__(self) -> Iterator[DivergenceSample]:
        return iter(self.samples)

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def r(self) -> list[float]:
        return [s.r for s in self.samples]

    @property
    def all_infinite(self) -> bool:
        return all(s.value is None for s in self.samples)

    def finite(self) -> FunctionSamples | None:
        pts = [(s.r, s.value) for s in self.samples if s.value is not None]
        if not pts:
            return None
        return FunctionSamples.of([p[0] for p in pts], [float(p[1]) for p in pts])

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": "divergence",
            "params": self.params.to_dict(),
            "gamma_ref": self.gamma_ref,
            "valid_radius": self.valid_radius,
            "s_grid": {"size": len(self.s_grid), **self.meta},
            "samples": [
                {
                    "r": s.r,
                    "value": s.value,
                    "s": s.s,
                    "path_length": s.path.length if s.path is not None else None,
                }
                for s in self.samples
            ],
        }


class RobustnessVerdict(StrEnum):
    EQUIVALENT = "equivalent-on-window"
    NOT_EQUIVALENT = "not-equivalent-on-window"


@dataclass(frozen=True, slots=True)
class RobustnessReport:
    first: DivergenceProfile
    second: DivergenceProfile
    fit_first_second: PreorderFit | None
    fit_second_first: PreorderFit | None
    class_first: FitReport | None
    class_second: FitReport | None
    verdict: RobustnessVerdict

    @property
    def fits(self) -> tuple[FitReport | None, FitReport | None]:
        return self.class_first, self.class_second

    def to_dict(self) -> dict[str, Any]:
        def _fit(f: PreorderFit | None) -> dict[str, float] | None:
            return f.to_dict() if f is not None else None

        def _cls(c: FitReport | None) -> dict[str, Any] | None:
            return c.to_dict() if c is not None else None

        return {
            "verdict": self.verdict.value,
            "params": [self.first.params.to_dict(), self.second.params.to_dict()],
            "fit_first_second": _fit(self.fit_first_second),
            "fit_second_first": _fit(self.fit_second_first),
            "class_first": _cls(self.class_first),
            "class_second": _cls(self.class_second),
        }


class SuperlinearVerdict(StrEnum):
    SUPERLINEAR = "superlinear-on-window"
    LINEAR_WITNESS = "linear-witness"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, slots=True)
class SuperlinearReport:
    verdict: SuperlinearVerdict
    witness_r: tuple[float, ...] = ()
    constants: tuple[float, float, float, float] | None = None
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "witness_r": list(self.witness_r),
            "constants": list(self.constants) if self.constants else None,
            "diagnostics": dict(self.diagnostics),
        }

