from __future__ import annotations

import math

from ..core.errors import InvalidParamsError
from ..metric import MetricGraph
from .types import RoundingEntry


class GraphBuilder:
    """
    Accumulates vertices and unit-step segments for a generated space.

    Continuous lengths are rounded to the nearest multiple of the resolution;
    every rounding that changes a length is logged.
    """

    def __init__(self, *, resolution: float = 1.0) -> None:
        if not resolution > 0:
            raise InvalidParamsError("resolution must be positive")
        self.resolution = float(resolution)
        self.n = 0
        self.edges: list[tuple[int, int, float]] = []
        self.rounding: list[RoundingEntry] = []

    def add_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int, w: float | None = None) -> None:
        self.edges.append((u, v, self.resolution if w is None else float(w)))

    def steps(self, length: float, *, segment: str, minimum: int = 1) -> int:
        k = int(math.floor(length / self.resolution + 0.5))
        k = max(k, minimum)
        realized = k * self.resolution
        if abs(realized - length) > 1e-12:
            self.rounding.append(
                RoundingEntry(segment=segment, requested=float(length), realized=realized)
            )
        return k

    def add_path(
        self, start: int, length: float, *, segment: str, end: int | None = None
    ) -> list[int]:
        """
        Attach a path of (rounded) `length` at `start`.

        Returns all its vertices, `start` first. With `end` given the path
        closes onto that existing vertex.
        """
        k = self.steps(length, segment=segment)
        pts = [start]
        for _ in range(k - 1 if end is not None else k):
            v = self.add_vertex()
            self.add_edge(pts[-1], v)
            pts.append(v)
        if end is not None:
            self.add_edge(pts[-1], end)
            pts.append(end)
        return pts

    def build(self, *, cache_size: int | None = None) -> MetricGraph:
        return MetricGraph(
            self.n, self.edges, resolution=self.resolution, cache_size=cache_size
        )
