"""
Closest-point projection onto the marked subspace Y.

With epsilon = 0 every projection set is computed at once by propagating
labels down the shortest-path DAG towards Y: a vertex projects onto the union
of the projections of its tight predecessors. With epsilon > 0 projection sets
come from truncated Dijkstra runs, computed lazily in batches and memoized.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from typing import Iterable, Sequence

import numpy as np

from ..core.errors import InvalidQueryError, InvalidSubspaceError
from ..core.logging import get_logger
from ..metric import GEODESIC_ATOL, PointSet
from ..spaces import MarkedSpace
from .types import ProjectionParams

log = get_logger(__name__)

_PROJECTOR_CACHE_SIZE = 8


def _tol(x: float) -> float:
    return GEODESIC_ATOL * max(1.0, abs(x))


class Projector:
    """Projection sets and their diameters for one (space, epsilon)."""

    def __init__(self, space: MarkedSpace, params: ProjectionParams) -> None:
        self.space = space
        self.params = params
        self.graph = space.graph
        self._y = space.Y.as_array()
        self.dist_to_y, _ = self.graph.distances_to_set(space.Y.members)
        n = self.graph.vertex_count
        self._proj: list[tuple[int, ...] | None] = [None] * n
        # smallest member and size of each settled projection set
        self._first = np.full(n, -1, dtype=np.int64)
        self._size = np.zeros(n, dtype=np.int64)
        self._diam: dict[tuple[int, ...], float] = {}
        self._lock = threading.Lock()
        if params.epsilon == 0.0:
            self._propagate_labels()

    @property
    def epsilon(self) -> float:
        return self.params.epsilon

    def _propagate_labels(self) -> None:
        csr = self.graph.csr
        d = self.dist_to_y
        proj = self._proj
        for y in self._y.tolist():
            proj[y] = (y,)
        order = np.lexsort((np.arange(d.size), d))
        for v in order.tolist():
            if proj[v] is not None:
                continue
            lo, hi = csr.indptr[v], csr.indptr[v + 1]
            nbrs = csr.indices[lo:hi]
            w = csr.data[lo:hi]
            tight = nbrs[np.abs(d[nbrs] + w - d[v]) <= _tol(d[v])]
            tight = tight[d[tight] < d[v]]
            labels = [proj[u] for u in tight.tolist() if proj[u] is not None]
            if not labels:
                raise InvalidSubspaceError(f"vertex {v} has no settled predecessor towards Y")
            if len(labels) == 1 or all(lab is labels[0] for lab in labels):
                proj[v] = labels[0]
            else:
                proj[v] = tuple(sorted(set().union(*labels)))
        self._first[:] = [p[0] for p in proj]  # type: ignore[index]
        self._size[:] = [len(p) for p in proj]  # type: ignore[arg-type]

    def _fill(self, vertices: Iterable[int]) -> None:
        missing = sorted({v for v in vertices if self._proj[v] is None})
        if not missing:
            return
        eps = self.epsilon
        y = self._y
        step = self.graph.row_batch_size(128)
        for start in range(0, len(missing), step):
            batch = missing[start : start + step]
            limit = float(self.dist_to_y[batch].max()) + eps
            rows = self.graph.limited_rows(batch, limit + _tol(limit))
            for v, row in zip(batch, rows):
                cut = self.dist_to_y[v] + eps
                members = y[row[y] <= cut + _tol(cut)]
                with self._lock:
                    self._proj[v] = tuple(int(m) for m in members)
                    self._first[v] = int(members[0])
                    self._size[v] = int(members.size)

    def projection(self, x: int) -> tuple[int, ...]:
        self._fill([x])
        out = self._proj[x]
        assert out is not None
        return out

    def projections(self, vertices: Sequence[int]) -> list[tuple[int, ...]]:
        self._fill(vertices)
        return [self._proj[v] for v in vertices]  # type: ignore[misc]

    def set_diameter(self, members: Sequence[int]) -> float:
        """Ambient diameter of a vertex set."""
        pts = sorted(set(int(m) for m in members))
        if len(pts) < 2:
            return 0.0
        key = tuple(pts)
        with self._lock:
            hit = self._diam.get(key)
        if hit is not None:
            return hit
        arr = np.asarray(pts, dtype=np.int64)
        best = 0.0
        step = self.graph.row_batch_size(128)
        for start in range(0, len(pts), step):
            rows = self.graph.distance_rows(pts[start : start + step])
            best = max(best, float(rows[:, arr].max()))
        with self._lock:
            self._diam[key] = best
        return best

    def labels(self, vertices: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(smallest projection member, projection size) per vertex."""
        self._fill(vertices.tolist())
        return self._first[vertices], self._size[vertices]


_projectors: OrderedDict[tuple[int, float], tuple[MarkedSpace, Projector]] = OrderedDict()
_projectors_lock = threading.Lock()


def projector_for(space: MarkedSpace, params: ProjectionParams) -> Projector:
    """Memoized Projector for the few most recent (space, epsilon) pairs."""
    key = (id(space), params.epsilon)
    with _projectors_lock:
        hit = _projectors.get(key)
        if hit is not None and hit[0] is space:
            _projectors.move_to_end(key)
            return hit[1]
    proj = Projector(space, params)
    with _projectors_lock:
        _projectors[key] = (space, proj)
        _projectors.move_to_end(key)
        while len(_projectors) > _PROJECTOR_CACHE_SIZE:
            _projectors.popitem(last=False)
    log.debug(
        "projector ready",
        family=space.family.value,
        vertices=space.graph.vertex_count,
        epsilon=params.epsilon,
    )
    return proj


def project(space: MarkedSpace, x: int, params: ProjectionParams | None = None) -> PointSet:
    params = params or ProjectionParams()
    x = space.graph.check_point(x)
    return PointSet.of(projector_for(space, params).projection(x))


def pair_projection_diameter(
    space: MarkedSpace, x: int, y: int, params: ProjectionParams | None = None
) -> float:
    """diam(project(x) | project(y)) in the ambient metric."""
    params = params or ProjectionParams()
    x = space.graph.check_point(x)
    y = space.graph.check_point(y)
    pr = projector_for(space, params)
    return pr.set_diameter(pr.projection(x) + pr.projection(y))


def subspace_projection_diameter(
    space: MarkedSpace, y_prime: PointSet, params: ProjectionParams | None = None
) -> float:
    params = params or ProjectionParams()
    if not len(y_prime):
        raise InvalidQueryError("Y' must be non-empty")
    for v in (y_prime.members[0], y_prime.members[-1]):
        space.graph.check_point(v, what="Y' member")
    if not y_prime.isdisjoint(space.Y):
        raise InvalidQueryError("Y' must be disjoint from Y")
    pr = projector_for(space, params)
    union: set[int] = set()
    for s in pr.projections(list(y_prime.members)):
        union.update(s)
    return pr.set_diameter(sorted(union))
