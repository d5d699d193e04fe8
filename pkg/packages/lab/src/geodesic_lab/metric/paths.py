from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from ..core.errors import InvalidParamsError, InvalidQueryError
from .graph import GEODESIC_ATOL, MetricGraph
from .types import ParamPath, PointSet, QGParams


def path_from_points(g: MetricGraph, points: Sequence[int]) -> ParamPath:
    """Parameterize a vertex sequence; consecutive vertices must be adjacent."""
    pts = [g.check_point(int(p)) for p in points]
    if not pts:
        raise InvalidParamsError("a path needs at least one point")
    cum = [0.0]
    for a, b in zip(pts, pts[1:]):
        w = g.edge_weight(a, b)
        if w is None:
            raise InvalidParamsError(f"{a} and {b} are not adjacent")
        cum.append(cum[-1] + w)
    return ParamPath(points=tuple(pts), cumulative=tuple(cum))


def _walk_back(
    csr: sparse.csr_matrix, dist: np.ndarray, source: int, target: int
) -> list[int]:
    """
    Rebuild a shortest path from a distance row by walking back from `target`.

    At each step the smallest-id neighbour u with dist[u] + w(u, v) == dist[v]
    (within GEODESIC_ATOL) is taken.
    """
    indptr, indices, data = csr.indptr, csr.indices, csr.data
    out = [target]
    v = target
    while v != source:
        lo, hi = indptr[v], indptr[v + 1]
        nbr = indices[lo:hi]
        w = data[lo:hi]
        du = dist[nbr]
        ok = (du < dist[v]) & (np.abs(du + w - dist[v]) <= GEODESIC_ATOL * max(1.0, dist[v]))
        cand = nbr[ok]
        if cand.size == 0:
            raise RuntimeError(f"no shortest-path predecessor at vertex {v}")
        v = int(cand.min())
        out.append(v)
    out.reverse()
    return out


def _points_to_path(points: list[int], dist: np.ndarray) -> ParamPath:
    return ParamPath(points=tuple(points), cumulative=tuple(float(dist[p]) for p in points))


def geodesic(g: MetricGraph, x: int, y: int) -> ParamPath:
    x = g.check_point(x)
    y = g.check_point(y)
    if x == y:
        return ParamPath(points=(x,), cumulative=(0.0,))
    dist = g.distances_from(x)
    return _points_to_path(_walk_back(g.csr, dist, x, y), dist)


def filtered_csr(g: MetricGraph, forbidden: PointSet | np.ndarray) -> sparse.csr_matrix:
    """Copy of the adjacency with every forbidden vertex isolated."""
    n = g.vertex_count
    if isinstance(forbidden, PointSet):
        mask = np.zeros(n, dtype=bool)
        mask[forbidden.as_array()] = True
    else:
        mask = np.asarray(forbidden, dtype=bool)
    csr = g.csr
    rows = np.repeat(np.arange(n), np.diff(csr.indptr))
    keep = ~(mask[rows] | mask[csr.indices])
    indptr = np.zeros(n + 1, dtype=csr.indptr.dtype)
    np.cumsum(np.bincount(rows[keep], minlength=n), out=indptr[1:])
    # rows stay sorted, so column indices within each row stay sorted too
    return sparse.csr_matrix(
        (csr.data[keep], csr.indices[keep], indptr), shape=(n, n)
    )


def avoid_shortest_path(
    g: MetricGraph,
    a: int,
    b: int,
    forbidden: PointSet | np.ndarray,
    *,
    limit: float = np.inf,
) -> tuple[ParamPath, float] | None:
    """
    Shortest a-b path in the graph with `forbidden` vertices removed.

    `forbidden` is a PointSet or a boolean vertex mask. Returns None when a and
    b are disconnected after filtering, or when the path is longer than `limit`.
    """
    a = g.check_point(a)
    b = g.check_point(b)
    mask = (
        np.isin(np.arange(g.vertex_count), forbidden.as_array())
        if isinstance(forbidden, PointSet)
        else np.asarray(forbidden, dtype=bool)
    )
    if mask[a] or mask[b]:
        raise InvalidQueryError(f"endpoint {a if mask[a] else b} is forbidden")
    if not mask.any():
        if np.isfinite(limit) and g.distance(a, b) > limit:
            return None
        p = geodesic(g, a, b)
        return p, p.length
    if a == b:
        return ParamPath(points=(a,), cumulative=(0.0,)), 0.0

    sub = filtered_csr(g, mask)
    dist = csgraph.dijkstra(sub, directed=True, indices=a, limit=limit)
    if not np.isfinite(dist[b]):
        return None
    p = _points_to_path(_walk_back(sub, dist, a, b), dist)
    return p, p.length


def path_distance_matrix(g: MetricGraph, path: ParamPath) -> np.ndarray:
    """d(p_i, p_j) for all vertex indices of `path`."""
    pts = np.asarray(path.points, dtype=np.int64)
    uniq, inv = np.unique(pts, return_inverse=True)
    # d(p_i, p_j) <= |path|, so truncated runs are exact here
    limit = path.length * (1 + GEODESIC_ATOL) + GEODESIC_ATOL
    step = g.row_batch_size()
    rows = np.vstack(
        [
            g.limited_rows(uniq[k : k + step].tolist(), limit)[:, pts]
            for k in range(0, uniq.size, step)
        ]
    )
    return rows[inv]


def quasigeodesic_violations(
    g: MetricGraph, path: ParamPath, q: QGParams, *, slack: float = 0.0
) -> list[tuple[int, int]]:
    """
    Index pairs (i, j), i < j, breaking arc/L - A <= d <= L*arc + A by more
    than `slack`.
    """
    d = path_distance_matrix(g, path)
    c = np.asarray(path.cumulative, dtype=np.float64)
    arc = np.abs(c[None, :] - c[:, None])
    tol = slack + GEODESIC_ATOL * max(1.0, path.length)
    low = arc / q.L - q.A - d > tol
    high = d - (q.L * arc + q.A) > tol
    bad = np.triu(low | high, k=1)
    ii, jj = np.nonzero(bad)
    return list(zip(ii.tolist(), jj.tolist()))


def is_quasigeodesic(
    g: MetricGraph, path: ParamPath, q: QGParams, *, slack: float = 0.0
) -> bool:
    return not quasigeodesic_violations(g, path, q, slack=slack)
