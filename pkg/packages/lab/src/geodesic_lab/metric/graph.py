from __future__ import annotations

import math
import threading
from collections import OrderedDict
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from ..core.errors import InvalidGraphError, InvalidQueryError
from ..core.logging import get_logger

log = get_logger(__name__)

# float tolerance for "this edge lies on a shortest path"
GEODESIC_ATOL = 1e-9
# floats per batched distance matrix
_ROW_BUDGET = 4_000_000


def _as_readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class MetricGraph:
    """
    Connected weighted graph with its shortest-path metric.

    Immutable after construction. Single-source distance rows are memoized in a
    bounded LRU cache keyed by source vertex; the cache is shared between
    threads and never changes an answer.
    """

    __slots__ = (
        "_n",
        "_resolution",
        "_u",
        "_v",
        "_w",
        "_csr",
        "_cache",
        "_cache_size",
        "_lock",
    )

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[tuple[int, int, float]] | np.ndarray,
        *,
        resolution: float = 1.0,
        cache_size: int | None = None,
    ) -> None:
        n = int(vertex_count)
        if n < 1:
            raise InvalidGraphError("graph needs at least one vertex")
        if not (math.isfinite(resolution) and resolution > 0):
            raise InvalidGraphError(f"resolution must be positive, got {resolution}")

        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges)
        if arr.size == 0:
            arr = np.zeros((0, 3), dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != 3:
            raise InvalidGraphError("edges must be (u, v, w) triples")

        a = arr[:, 0]
        b = arr[:, 1]
        w = arr[:, 2].astype(np.float64)
        if np.any(a != np.floor(a)) or np.any(b != np.floor(b)):
            raise InvalidGraphError("edge endpoints must be integer ids")
        a = a.astype(np.int64)
        b = b.astype(np.int64)
        if np.any((a < 0) | (a >= n) | (b < 0) | (b >= n)):
            raise InvalidGraphError(f"edge endpoint out of range [0, {n})")
        if np.any(a == b):
            k = int(np.flatnonzero(a == b)[0])
            raise InvalidGraphError(f"self-loop at vertex {int(a[k])}")
        if not np.all(np.isfinite(w)) or np.any(w <= 0):
            raise InvalidGraphError("edge weights must be finite and > 0")

        # canonical (min, max) orientation; parallel edges keep the lightest
        u = np.minimum(a, b)
        v = np.maximum(a, b)
        order = np.lexsort((w, v, u))
        u, v, w = u[order], v[order], w[order]
        if u.size:
            keep = np.ones(u.size, dtype=bool)
            keep[1:] = (u[1:] != u[:-1]) | (v[1:] != v[:-1])
            u, v, w = u[keep], v[keep], w[keep]

        csr = sparse.csr_matrix(
            (np.concatenate([w, w]), (np.concatenate([u, v]), np.concatenate([v, u]))),
            shape=(n, n),
        )
        csr.sort_indices()

        n_comp, _ = csgraph.connected_components(csr, directed=False)
        if n_comp != 1:
            raise InvalidGraphError(f"graph is not connected ({n_comp} components)")

        if cache_size is None:
            from ..core.config import load_settings

            cache_size = load_settings().distance_cache_size

        self._n = n
        self._resolution = float(resolution)
        self._u = _as_readonly(u)
        self._v = _as_readonly(v)
        self._w = _as_readonly(w)
        self._csr = csr
        self._cache: OrderedDict[int, np.ndarray] = OrderedDict()
        self._cache_size = max(int(cache_size), 0)
        self._lock = threading.Lock()

    # structure

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return int(self._u.size)

    @property
    def resolution(self) -> float:
        return self._resolution

    @property
    def csr(self) -> sparse.csr_matrix:
        return self._csr

    def edge_list(self) -> list[tuple[int, int, float]]:
        return [
            (int(a), int(b), float(c))
            for a, b, c in zip(self._u.tolist(), self._v.tolist(), self._w.tolist())
        ]

    def neighbors(self, x: int) -> tuple[np.ndarray, np.ndarray]:
        lo, hi = self._csr.indptr[x], self._csr.indptr[x + 1]
        return self._csr.indices[lo:hi], self._csr.data[lo:hi]

    def edge_weight(self, x: int, y: int) -> float | None:
        idx, data = self.neighbors(x)
        k = int(np.searchsorted(idx, y))
        if k < idx.size and idx[k] == y:
            return float(data[k])
        return None

    def check_point(self, x: int, *, what: str = "point") -> int:
        if not isinstance(x, (int, np.integer)) or not 0 <= int(x) < self._n:
            raise InvalidQueryError(f"{what} {x!r} is not a vertex id in [0, {self._n})")
        return int(x)

    # distances

    def distances_from(self, source: int) -> np.ndarray:
        """Read-only row of d(source, .)."""
        return self.distance_rows([source])[0]

    def distance_rows(self, sources: Sequence[int]) -> np.ndarray:
        """
        Matrix of d(s, .) for each s in `sources`, in the given order.

        Misses are computed with one batched Dijkstra call.
        """
        srcs = [self.check_point(int(s), what="source") for s in sources]
        if not srcs:
            return np.zeros((0, self._n), dtype=np.float64)

        found: dict[int, np.ndarray] = {}
        with self._lock:
            for s in srcs:
                row = self._cache.get(s)
                if row is not None:
                    self._cache.move_to_end(s)
                    found[s] = row
        missing = sorted({s for s in srcs if s not in found})

        if missing:
            rows = csgraph.dijkstra(self._csr, directed=True, indices=missing)
            rows = np.atleast_2d(rows)
            with self._lock:
                for s, row in zip(missing, rows):
                    row = _as_readonly(np.array(row, dtype=np.float64))
                    found[s] = row
                    if self._cache_size:
                        self._cache[s] = row
                        self._cache.move_to_end(s)
                        while len(self._cache) > self._cache_size:
                            self._cache.popitem(last=False)

        return np.vstack([found[s] for s in srcs])

    def row_batch_size(self, cap: int = 64) -> int:
        """How many full distance rows fit in one batched Dijkstra call."""
        return max(1, min(cap, _ROW_BUDGET // self._n))

    def limited_rows(self, sources: Sequence[int], limit: float) -> np.ndarray:
        """Distance rows truncated at `limit` (inf beyond). Not cached."""
        srcs = [self.check_point(int(s), what="source") for s in sources]
        if not srcs:
            return np.zeros((0, self._n), dtype=np.float64)
        rows = csgraph.dijkstra(self._csr, directed=True, indices=srcs, limit=limit)
        return np.atleast_2d(rows)

    def distances_to_set(self, members: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
        """
        (d(., S), nearest source) from one multi-source Dijkstra.

        The nearest-source labels are whatever scipy settles first and are only
        meant for seeding; callers that need tie-breaks must resolve them.
        """
        srcs = sorted({self.check_point(int(s), what="source") for s in members})
        dist, _, nearest = csgraph.dijkstra(
            self._csr,
            directed=True,
            indices=srcs,
            min_only=True,
            return_predecessors=True,
        )
        return np.asarray(dist, dtype=np.float64), np.asarray(nearest, dtype=np.int64)

    def distance(self, x: int, y: int) -> float:
        x = self.check_point(x)
        y = self.check_point(y)
        if x == y:
            return 0.0
        # prefer whichever row is already cached
        with self._lock:
            row = self._cache.get(y)
        if row is not None:
            return float(row[x])
        return float(self.distances_from(x)[y])

    def __repr__(self) -> str:
        return (
            f"MetricGraph(vertex_count={self._n}, edges={self.edge_count}, "
            f"resolution={self._resolution:g})"
        )
