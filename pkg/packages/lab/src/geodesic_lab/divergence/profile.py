from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from ..core.errors import InvalidParamsError, InvalidQueryError, WindowViolationError
from ..core.logging import get_logger
from ..core.parallel import ordered_map
from ..core.time import monotonic_ms
from ..metric import GEODESIC_ATOL, ParamPath, avoid_shortest_path
from ..projection import radius_grid
from ..spaces import MarkedSpace
from .types import DivergenceParams, DivergenceProfile, DivergenceSample

log = get_logger(__name__)


def _gamma(space: MarkedSpace) -> ParamPath:
    if space.gamma is None:
        raise InvalidQueryError(f"{space.family.value} space has no marked path gamma")
    return space.gamma


def _vertex_at(gamma: ParamPath, t: float) -> int | None:
    c = np.asarray(gamma.cumulative)
    tol = GEODESIC_ATOL * max(1.0, abs(t))
    k = int(np.searchsorted(c, t - tol))
    if k < c.size and abs(c[k] - t) <= tol:
        return k
    return None


def forbidden_ball(space: MarkedSpace, center: int, radius: float) -> np.ndarray:
    """Boolean mask of the closed ball; empty when radius <= 0."""
    mask = np.zeros(space.graph.vertex_count, dtype=bool)
    if radius <= 0:
        return mask
    row = space.graph.limited_rows([center], radius * (1 + GEODESIC_ATOL))[0]
    mask[row <= radius + GEODESIC_ATOL * max(1.0, radius)] = True
    return mask


def lambda_detour(
    space: MarkedSpace,
    r: float,
    t: float,
    dp: DivergenceParams,
    *,
    limit: float = math.inf,
) -> tuple[ParamPath, float] | None:
    """
    Shortest path from gamma(t - r) to gamma(t + r) avoiding the closed ball
    of radius lam*(r/L - A) - kappa around gamma(t), or None.

    With a finite `limit`, paths longer than it also come back as None.
    """
    gamma = _gamma(space)
    if r < 0:
        raise InvalidParamsError(f"r must be >= 0, got {r}")
    tol = GEODESIC_ATOL * max(1.0, gamma.length)
    if t - r < -tol or t + r > gamma.length + tol:
        raise WindowViolationError(
            f"gamma({t:g} -+ {r:g}) leaves the parameter range [0, {gamma.length:g}]"
        )
    ka, kc, kb = (_vertex_at(gamma, x) for x in (t - r, t, t + r))
    if ka is None or kc is None or kb is None:
        raise InvalidParamsError(f"no gamma vertex at one of {t - r:g}, {t:g}, {t + r:g}")
    a, c, b = gamma.points[ka], gamma.points[kc], gamma.points[kb]
    mask = forbidden_ball(space, c, dp.forbidden_radius(r))
    if mask[a] or mask[b]:
        return None
    return avoid_shortest_path(space.graph, a, b, mask, limit=limit)


def lambda_divergence(
    space: MarkedSpace, r: float, t: float, dp: DivergenceParams | None = None
) -> float | None:
    """Detour length at (r, t); None when the ball disconnects the endpoints."""
    found = lambda_detour(space, r, t, dp or DivergenceParams())
    return None if found is None else found[1]


def default_s_grid(
    space: MarkedSpace, *, stride: int = 1, include_landmarks: bool = True
) -> list[float]:
    """Every `stride`-th gamma vertex parameter, plus landmark positions on gamma."""
    if stride < 1:
        raise InvalidParamsError(f"stride must be >= 1, got {stride}")
    gamma = _gamma(space)
    params = list(gamma.cumulative[::stride])
    if include_landmarks and space.landmarks:
        pos = {v: k for k, v in enumerate(gamma.points)}
        params.extend(
            gamma.cumulative[pos[v]] for v in space.landmarks.values() if v in pos
        )
    return sorted(set(float(p) for p in params))


def _best_at_radius(
    space: MarkedSpace, r: float, s_grid: Sequence[float], dp: DivergenceParams
) -> DivergenceSample:
    best: tuple[float, float, ParamPath] | None = None
    for s in s_grid:
        limit = best[0] if best is not None else math.inf
        found = lambda_detour(space, r, s, dp, limit=limit)
        if found is None:
            continue
        path, length = found
        if best is None or length < best[0]:
            best = (length, s, path)
    if best is None:
        return DivergenceSample(r=r, value=None)
    return DivergenceSample(r=r, value=best[0], s=best[1], path=best[2])


def admissible_s(gamma: ParamPath, r: float, s_grid: Sequence[float]) -> list[float]:
    tol = GEODESIC_ATOL * max(1.0, gamma.length)
    return [
        s
        for s in s_grid
        if s - r >= -tol
        and s + r <= gamma.length + tol
        and _vertex_at(gamma, s - r) is not None
        and _vertex_at(gamma, s) is not None
        and _vertex_at(gamma, s + r) is not None
    ]


def divergence_r_grid(
    space: MarkedSpace,
    s_grid: Sequence[float],
    *,
    r_max: float | None = None,
    count: int = 40,
) -> list[float]:
    """
    Snapped radii for a divergence sweep.

    An explicit r_max is taken as is and left to divergence_profile to police.
    The default window stops at half the length of gamma (and valid_radius)
    and keeps only radii some s on the grid admits.
    """
    gamma = _gamma(space)
    res = space.graph.resolution
    if r_max is not None:
        return radius_grid(float(r_max), res, count)
    top = min(space.valid_radius, gamma.length / 2)
    if top < res:
        raise WindowViolationError(
            f"gamma of length {gamma.length:g} admits no radius >= {res:g}"
        )
    return [r for r in radius_grid(top, res, count) if admissible_s(gamma, r, s_grid)]


def divergence_profile(
    space: MarkedSpace,
    dp: DivergenceParams | None,
    r_grid: Sequence[float],
    s_grid: Sequence[float] | None = None,
    *,
    jobs: int | None = 1,
) -> DivergenceProfile:
    """
    Delta(r) = min over sampled s of the detour length at (r, s).

    s is scanned in increasing order and the running best bounds each
    Dijkstra run, so the witness is the smallest s attaining the minimum.
    """
    dp = dp or DivergenceParams()
    gamma = _gamma(space)
    grid = sorted(set(float(r) for r in r_grid))
    if not grid:
        raise InvalidParamsError("empty radius grid")
    if grid[-1] > space.valid_radius + GEODESIC_ATOL * max(1.0, space.valid_radius):
        raise WindowViolationError(
            f"r={grid[-1]:g} exceeds valid_radius={space.valid_radius:g}"
        )
    s_all = sorted(set(float(s) for s in (s_grid if s_grid is not None else default_s_grid(space))))
    per_r = {r: admissible_s(gamma, r, s_all) for r in grid}
    empty = [r for r, ss in per_r.items() if not ss]
    if empty:
        raise WindowViolationError(f"no admissible s on the grid for r={empty[0]:g}")

    t0 = monotonic_ms()
    samples = ordered_map(lambda r: _best_at_radius(space, r, per_r[r], dp), grid, jobs=jobs)
    steps = np.diff(np.asarray(s_all)) if len(s_all) > 1 else np.zeros(1)
    log.info(
        "divergence profile",
        family=space.family.value,
        params=dp.to_text(),
        radii=len(grid),
        s_points=len(s_all),
        infinite=sum(1 for s in samples if s.value is None),
        duration_ms=monotonic_ms() - t0,
    )
    return DivergenceProfile(
        samples=tuple(samples),
        params=dp,
        s_grid=tuple(s_all),
        valid_radius=space.valid_radius,
        meta={"max_step": float(steps.max()) if steps.size else 0.0},
    )
