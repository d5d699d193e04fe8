from __future__ import annotations

import math

import numpy as np

from ..core.errors import InvalidParamsError
from ..core.logging import get_logger
from ..metric import GEODESIC_ATOL, MetricGraph, ParamPath, geodesic, path_distance_matrix
from .types import ShortcutResult

log = get_logger(__name__)

_MAX_ROUNDS = 10_000


def _splice(
    g: MetricGraph, path: ParamPath, origin: list[int | None], i: int, j: int
) -> tuple[ParamPath, list[int | None]]:
    head = path.slice(0, i)
    mid = geodesic(g, path.points[i], path.points[j])
    tail = path.slice(j, len(path) - 1)
    fresh: list[int | None] = [None] * (len(mid) - 2)
    return head.concat(mid).concat(tail), origin[: i + 1] + fresh + origin[j:]


def _replaced(gamma: ParamPath, origin: list[int | None]) -> tuple[tuple[float, float], ...]:
    """Input stretches between consecutive surviving input vertices that were cut out."""
    out: list[tuple[float, float]] = []
    prev, gap = 0, False
    for k in origin[1:]:
        if k is None:
            gap = True
            continue
        if gap or k > prev + 1:
            out.append((float(gamma.cumulative[prev]), float(gamma.cumulative[k])))
        prev, gap = k, False
    return tuple(out)


def shortcut_report(g: MetricGraph, gamma: ParamPath, L: float) -> ShortcutResult:
    """
    Shorten `gamma` until it is an (L, 0)-quasi-geodesic.

    With D(i, j) = L * d(p_i, p_j) - arc(i, j), a pair with D < 0 breaks the
    lower bound. Each round takes the earliest such start i and the latest
    end j with D(i, j) <= 0, and replaces that stretch by a geodesic. A path
    with no violating pair comes back unchanged.

    The result lists the input stretches that were cut out; a single
    stretch may have been rewritten over several rounds.
    """
    if not (math.isfinite(L) and L >= 1):
        raise InvalidParamsError(f"L must be >= 1, got {L}")
    p, q = gamma.start, gamma.end
    if p == q:
        raise InvalidParamsError("shortcut needs distinct endpoints")
    d_pq = g.distance(p, q)
    need = gamma.length / d_pq
    if L < need * (1 - 1e-12):
        raise InvalidParamsError(f"L={L:g} below |gamma|/d(p, q) = {need:g}")

    path = gamma
    origin: list[int | None] = list(range(len(gamma)))
    for rounds in range(_MAX_ROUNDS):
        d = path_distance_matrix(g, path)
        c = np.asarray(path.cumulative, dtype=np.float64)
        D = L * d - (c[None, :] - c[:, None])
        tol = GEODESIC_ATOL * max(1.0, path.length)
        bad = np.triu(D < -tol, k=1)
        if not bad.any():
            if rounds:
                log.debug("shortcut done", rounds=rounds, length=path.length, input=gamma.length)
            return ShortcutResult(path=path, replaced=_replaced(gamma, origin), rounds=rounds)
        i = int(np.flatnonzero(bad.any(axis=1))[0])
        ok = np.flatnonzero(D[i, i + 1 :] <= tol) + i + 1
        j = int(ok[-1])
        path, origin = _splice(g, path, origin, i, j)
    raise InvalidParamsError(f"shortcut did not settle after {_MAX_ROUNDS} rounds")


def shortcut_quasigeodesify(g: MetricGraph, gamma: ParamPath, L: float) -> ParamPath:
    """Shortened path only; see `shortcut_report`."""
    return shortcut_report(g, gamma, L).path


def degradation(g: MetricGraph, original: ParamPath, shortened: ParamPath) -> float:
    """Largest distance from a vertex of `shortened` to the vertex set of `original`."""
    dist, _ = g.distances_to_set(sorted(set(original.points)))
    return float(dist[list(shortened.points)].max())
