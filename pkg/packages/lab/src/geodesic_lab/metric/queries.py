from __future__ import annotations

import numpy as np

from ..core.errors import InvalidQueryError, InvalidSubspaceError
from .graph import MetricGraph
from .paths import geodesic
from .types import ParamPath, PointSet


def _require(g: MetricGraph, s: PointSet, what: str) -> PointSet:
    if not len(s):
        raise InvalidSubspaceError(f"{what} must be non-empty")
    for m in (s.members[0], s.members[-1]):
        if not 0 <= m < g.vertex_count:
            raise InvalidSubspaceError(f"{what} contains {m}, outside [0, {g.vertex_count})")
    return s


def distance(g: MetricGraph, x: int, y: int) -> float:
    return g.distance(x, y)


def distance_to_set(g: MetricGraph, x: int, Y: PointSet) -> float:
    _require(g, Y, "Y")
    return float(g.distances_from(x)[Y.as_array()].min())


def distances_to_set(g: MetricGraph, Y: PointSet) -> np.ndarray:
    """d(v, Y) for every vertex v."""
    _require(g, Y, "Y")
    dist, _ = g.distances_to_set(Y.members)
    return dist


def hausdorff_distance(g: MetricGraph, Y: PointSet, Z: PointSet) -> float:
    _require(g, Y, "Y")
    _require(g, Z, "Z")
    if Y == Z:
        return 0.0
    to_y = distances_to_set(g, Y)
    to_z = distances_to_set(g, Z)
    return float(max(to_z[Y.as_array()].max(), to_y[Z.as_array()].max()))


def triangle_sides(
    g: MetricGraph, x: int, y: int, z: int
) -> tuple[ParamPath, ParamPath, ParamPath]:
    """
    The three sides [x,y], [y,z], [x,z].

    Each side is built from its smaller endpoint so the triangle does not depend
    on the order the corners are given in.
    """

    def side(a: int, b: int) -> ParamPath:
        return geodesic(g, min(a, b), max(a, b))

    return side(x, y), side(y, z), side(x, z)


def triangle_thinness(g: MetricGraph, x: int, y: int, z: int) -> float:
    x, y, z = (g.check_point(p) for p in (x, y, z))
    if len({x, y, z}) != 3:
        raise InvalidQueryError(f"triangle corners must be distinct, got {(x, y, z)}")

    sides = triangle_sides(g, x, y, z)
    delta = 0.0
    for k, s in enumerate(sides):
        others = set()
        for j, t in enumerate(sides):
            if j != k:
                others.update(t.points)
        dist, _ = g.distances_to_set(sorted(others))
        delta = max(delta, float(dist[list(s.points)].max()))
    return delta
