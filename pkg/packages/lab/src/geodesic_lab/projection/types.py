from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any, Iterator, Mapping, Sequence

import numpy as np

from ..asymptotics import FunctionSamples
from ..core.errors import InvalidParamsError
from ..functions import FunctionSpec, check_below_identity, check_non_decreasing


class ProfileKind(StrEnum):
    CONTRACTION = "contraction"
    DIVERGENCE = "divergence"
    MORSE = "morse"
    MORSE_SEPARATION = "morse-separation"
    GEODESIC_IMAGE = "geodesic-image"


@dataclass(frozen=True, slots=True)
class ProjectionParams:
    epsilon: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.epsilon) and self.epsilon >= 0):
            raise InvalidParamsError(f"epsilon must be >= 0, got {self.epsilon}")


@dataclass(frozen=True, slots=True)
class ContractionHypothesis:
    """
    (rho1, rho2) with rho1 checked only on [domain_start, inf): functions
    such as r - log2(r) are admissible from a base radius on.
    """

    rho1: FunctionSpec
    rho2: FunctionSpec
    domain_start: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.domain_start) and self.domain_start >= 0):
            raise InvalidParamsError(f"domain_start must be >= 0, got {self.domain_start}")
        grid = np.unique(np.concatenate([[0.0], np.geomspace(1e-3, 1e6, 181)]))
        grid = np.unique(np.concatenate([[self.domain_start], grid[grid >= self.domain_start]]))
        check_non_decreasing(self.rho1, grid, name="rho1")
        check_below_identity(self.rho1, grid, name="rho1")
        check_non_decreasing(self.rho2, grid, name="rho2")

    @classmethod
    def parse(cls, rho1: str, rho2: str) -> "ContractionHypothesis":
        return cls(rho1=FunctionSpec.parse(rho1), rho2=FunctionSpec.parse(rho2))


_LEVELS_PER_BAND = 4


class SamplingMode(StrEnum):
    AUTO = "auto"
    EXHAUSTIVE = "exhaustive"
    STRATIFIED = "stratified"


@dataclass(frozen=True, slots=True)
class SamplingPlan:
    """
    Which base vertices a profile sweep visits.

    `auto` is exhaustive up to `max_exhaustive_vertices` candidates and
    stratified above. Stratified plans cut distance-to-Y into `bands`
    geometric bands and draw up to `per_band` vertices from each with a
    seeded generator; landmarks are added on top.
    """

    mode: SamplingMode = SamplingMode.AUTO
    max_exhaustive_vertices: int = 5000
    bands: int = 48
    per_band: int = 16
    seed: int = 0
    include_landmarks: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", SamplingMode(self.mode))
        if self.max_exhaustive_vertices < 1 or self.bands < 1 or self.per_band < 1:
            raise InvalidParamsError("sampling plan sizes must be >= 1")

    def is_exhaustive(self, candidates: int) -> bool:
        if self.mode is SamplingMode.EXHAUSTIVE:
            return True
        if self.mode is SamplingMode.STRATIFIED:
            return False
        return candidates <= self.max_exhaustive_vertices

    def choose(
        self,
        candidates: np.ndarray,
        dist_to_y: np.ndarray,
        *,
        landmarks: Sequence[int] = (),
    ) -> np.ndarray:
        """Sorted vertex ids to visit among `candidates`."""
        candidates = np.unique(np.asarray(candidates, dtype=np.int64))
        if self.is_exhaustive(candidates.size):
            return candidates

        rng = np.random.default_rng(self.seed)
        d = dist_to_y[candidates]
        picked: list[np.ndarray] = []
        off_y = d > 0
        levels = np.unique(d[off_y])
        if levels.size:
            if levels.size <= self.bands * _LEVELS_PER_BAND:
                # few distinct distances: one band per realized distance
                band = np.searchsorted(levels, d)
                n_bands = levels.size
            else:
                edges = np.geomspace(levels[0], levels[-1], self.bands + 1)
                edges[0] = 0.0
                edges[-1] = np.inf
                band = np.searchsorted(edges, d, side="right") - 1
                n_bands = self.bands
            for b in range(n_bands):
                members = candidates[(band == b) & off_y]
                if members.size > self.per_band:
                    members = np.sort(rng.choice(members, size=self.per_band, replace=False))
                picked.append(members)
        on_y = candidates[d == 0]
        if on_y.size:
            take = min(on_y.size, self.per_band)
            picked.append(np.sort(rng.choice(on_y, size=take, replace=False)))
        if self.include_landmarks and len(landmarks):
            lm = np.asarray(sorted(set(int(x) for x in landmarks)), dtype=np.int64)
            picked.append(lm[np.isin(lm, candidates)])
        if not picked:
            return candidates[:0]
        return np.unique(np.concatenate(picked))

    def to_dict(self) -> dict[str, Any]:
        return {
            "mode": self.mode.value,
            "max_exhaustive_vertices": self.max_exhaustive_vertices,
            "bands": self.bands,
            "per_band": self.per_band,
            "seed": self.seed,
            "include_landmarks": self.include_landmarks,
        }


@dataclass(frozen=True, slots=True)
class ProfileSample:
    r: float
    value: float | None
    witness: tuple[int, ...] | None = None
    extra: Mapping[str, float] = field(default_factory=dict)

    @property
    def is_infinite(self) -> bool:
        return self.value is None


@dataclass(frozen=True, slots=True)
class Profile:
    """
    Sampled profile r -> value with witnesses.

    A value of None is infinite (no admissible path); only divergence
    profiles produce those.
    """

    kind: ProfileKind
    samples: tuple[ProfileSample, ...]
    params: Mapping[str, Any]
    valid_radius: float

    def __post_init__(self) -> None:
        rs = [s.r for s in self.samples]
        if any(b <= a for a, b in zip(rs, rs[1:])):
            raise InvalidParamsError("profile radii must be strictly increasing")

    def __iter__(self) -> Iterator[ProfileSample]:
        return iter(self.samples)

    def __len__(self) -> int:
        return len(self.samples)

    @property
    def r(self) -> list[float]:
        return [s.r for s in self.samples]

    @property
    def values(self) -> list[float | None]:
        return [s.value for s in self.samples]

    def finite(self) -> FunctionSamples | None:
        """Finite samples only, or None if there are none."""
        pts = [(s.r, s.value) for s in self.samples if s.value is not None]
        if not pts:
            return None
        return FunctionSamples.of([p[0] for p in pts], [float(p[1]) for p in pts])

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "params": dict(self.params),
            "valid_radius": self.valid_radius,
            "samples": [
                {
                    "r": s.r,
                    "value": s.value,
                    "witness": list(s.witness) if s.witness is not None else None,
                    **dict(s.extra),
                }
                for s in self.samples
            ],
        }


def radius_grid(
    r_max: float, resolution: float, count: int = 40, *, min_count: int = 0
) -> list[float]:
    """
    Geometric radii in [resolution, r_max], snapped to multiples of resolution.

    A window too short to keep `min_count` distinct snapped radii is filled
    up with evenly spaced unsnapped ones.
    """
    if not (r_max >= resolution > 0):
        raise InvalidParamsError(f"need r_max >= resolution > 0, got {r_max}, {resolution}")
    raw = np.geomspace(resolution, r_max, max(count, 2))
    snapped = np.round(raw / resolution) * resolution
    snapped = snapped[(snapped >= resolution) & (snapped <= r_max + 1e-9)]
    out = {float(x) for x in snapped}
    if len(out) < min_count:
        out.update(float(x) for x in np.linspace(resolution, r_max, min_count))
    return sorted(out)
