from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any, Mapping

from ..core.errors import InvalidSubspaceError
from ..functions import FunctionSpec
from ..metric import MetricGraph, ParamPath, PointSet


class Family(StrEnum):
    CYCLE_ARC = "cycle_arc"
    TREE = "tree"
    GRID_L1 = "grid_l1"
    LOG_SPACE = "log_space"
    NECKLACE = "necklace"
    DIVERGENCE_NECKLACE = "divergence_necklace"
    HALFPLANE = "halfplane"
    CUSTOM = "custom"


@dataclass(frozen=True, slots=True)
class RoundingEntry:
    segment: str
    requested: float
    realized: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "segment": self.segment,
            "requested": self.requested,
            "realized": self.realized,
        }


@dataclass(frozen=True, slots=True)
class SpaceMeta:
    family: Family
    params: Mapping[str, Any]
    valid_radius: float
    truncation_index: int = 0
    rounding_log: tuple[RoundingEntry, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family.value,
            "params": dict(self.params),
            "valid_radius": self.valid_radius,
            "truncation_index": self.truncation_index,
            "rounding_log": [e.to_dict() for e in self.rounding_log],
        }


@dataclass(frozen=True, slots=True)
class MarkedSpace:
    graph: MetricGraph
    Y: PointSet
    meta: SpaceMeta
    gamma: ParamPath | None = None
    landmarks: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        n = self.graph.vertex_count
        if not len(self.Y):
            raise InvalidSubspaceError("Y must be non-empty")
        if self.Y.members[0] < 0 or self.Y.members[-1] >= n:
            raise InvalidSubspaceError("Y contains ids outside the graph")
        if self.gamma is not None:
            if PointSet.of(self.gamma.points) != self.Y or len(set(self.gamma.points)) != len(
                self.gamma.points
            ):
                raise InvalidSubspaceError("gamma must traverse exactly the vertices of Y")
        for name, v in self.landmarks.items():
            if not 0 <= v < n:
                raise InvalidSubspaceError(f"landmark {name}={v} outside the graph")

    @property
    def family(self) -> Family:
        return self.meta.family

    @property
    def valid_radius(self) -> float:
        return self.meta.valid_radius

    def landmark(self, name: str) -> int:
        try:
            return self.landmarks[name]
        except KeyError:
            raise InvalidSubspaceError(f"no landmark named {name!r}") from None

    def with_subspace(self, Y: PointSet, *, note: str | None = None) -> "MarkedSpace":
        """Same graph, new Y; gamma is dropped when it no longer matches."""
        params = dict(self.meta.params)
        if note:
            params["subspace"] = note
        meta = SpaceMeta(
            family=self.meta.family,
            params=params,
            valid_radius=self.meta.valid_radius,
            truncation_index=self.meta.truncation_index,
            rounding_log=self.meta.rounding_log,
        )
        gamma = self.gamma if self.gamma is not None and PointSet.of(self.gamma.points) == Y else None
        return MarkedSpace(
            graph=self.graph, Y=Y, meta=meta, gamma=gamma, landmarks=self.landmarks
        )


@dataclass(frozen=True, slots=True)
class AbelData:
    rho: FunctionSpec
    A: float
    A_prime: float
    sigma: tuple[float, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "rho": self.rho.to_text(),
            "A": self.A,
            "A_prime": self.A_prime,
            "sigma": list(self.sigma),
        }
