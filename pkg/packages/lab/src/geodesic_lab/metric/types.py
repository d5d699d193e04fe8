from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from ..core.errors import InvalidParamsError

PointId = int
Length = float


@dataclass(frozen=True, slots=True)
class PointSet:
    """Sorted, duplicate-free set of vertex ids."""

    members: tuple[int, ...]

    @classmethod
    def of(cls, ids: Iterable[int]) -> "PointSet":
        return cls(members=tuple(sorted({int(i) for i in ids})))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, (int, np.integer)):
            return False
        m = self.members
        k = bisect_left(m, int(x))
        return k < len(m) and m[k] == x

    def as_array(self) -> np.ndarray:
        return np.asarray(self.members, dtype=np.int64)

    def isdisjoint(self, other: "PointSet") -> bool:
        return set(self.members).isdisjoint(other.members)


@dataclass(frozen=True, slots=True)
class ParamPath:
    """
    Edge path with its arc-length parameterization.

    cumulative[i] is the length of the prefix ending at points[i]; a single
    point is the constant path of length 0.
    """

    points: tuple[int, ...]
    cumulative: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise InvalidParamsError("a path needs at least one point")
        if len(self.points) != len(self.cumulative):
            raise InvalidParamsError("points and cumulative lengths differ in size")
        if self.cumulative[0] != 0.0:
            raise InvalidParamsError("cumulative length must start at 0")

    @property
    def length(self) -> float:
        return self.cumulative[-1]

    @property
    def start(self) -> int:
        return self.points[0]

    @property
    def end(self) -> int:
        return self.points[-1]

    def __len__(self) -> int:
        return len(self.points)

    def concat(self, other: "ParamPath") -> "ParamPath":
        if self.end != other.start:
            raise InvalidParamsError(
                f"cannot join paths ending at {self.end} and starting at {other.start}"
            )
        off = self.length
        return ParamPath(
            points=self.points + other.points[1:],
            cumulative=self.cumulative + tuple(off + c for c in other.cumulative[1:]),
        )

    def slice(self, i: int, j: int) -> "ParamPath":
        base = self.cumulative[i]
        return ParamPath(
            points=self.points[i : j + 1],
            cumulative=tuple(c - base for c in self.cumulative[i : j + 1]),
        )

    def to_dict(self) -> dict[str, object]:
        return {"points": list(self.points), "length": self.length}


@dataclass(frozen=True, slots=True)
class QGParams:
    L: float = 1.0
    A: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.L) and self.L >= 1.0):
            raise InvalidParamsError(f"L must be >= 1, got {self.L}")
        if not (math.isfinite(self.A) and self.A >= 0.0):
            raise InvalidParamsError(f"A must be >= 0, got {self.A}")
