from __future__ import annotations

from typing import Sequence

import numpy as np

from ..asymptotics import CoarseClass, classify_growth
from ..core.errors import InvalidParamsError, InvalidQueryError
from ..core.logging import get_logger
from ..core.parallel import better_max, ordered_map
from ..core.time import monotonic_ms
from ..metric import GEODESIC_ATOL, ParamPath, avoid_shortest_path, geodesic
from ..projection import Profile, ProfileKind, ProfileSample, ProjectionParams, projector_for
from ..spaces import MarkedSpace
from .shortcut import shortcut_quasigeodesify
from .types import DetourWitness, MorseVerdict, PairPlan

log = get_logger(__name__)


def _dist_to_y(space: MarkedSpace) -> np.ndarray:
    return projector_for(space, ProjectionParams()).dist_to_y


def _forbidden(space: MarkedSpace, dy: np.ndarray, B: float, y1: int, y2: int) -> np.ndarray:
    """{d(., Y) <= B} minus the closed B-balls around the endpoints."""
    tol = GEODESIC_ATOL * max(1.0, B)
    mask = dy <= B + tol
    rows = space.graph.limited_rows([y1, y2], B * (1 + GEODESIC_ATOL) + GEODESIC_ATOL)
    mask &= ~(rows <= B + tol).any(axis=0)
    return mask


def _certify(space: MarkedSpace, path: ParamPath, d: float) -> tuple[float, ParamPath]:
    L_path = max(1.0, path.length / d)
    return L_path, shortcut_quasigeodesify(space.graph, path, L_path)


def detour_bound(
    space: MarkedSpace, y1: int, y2: int, L: float
) -> tuple[float, DetourWitness]:
    """
    Largest realized level B < d(y1, y2)/2 of d(., Y) such that some path from
    y1 to y2 of length <= L * d(y1, y2) avoids the closed B-neighbourhood of Y
    outside the B-balls around y1 and y2.

    Falls back to B = 0 with the geodesic as witness.
    """
    if not L >= 1:
        raise InvalidParamsError(f"L must be >= 1, got {L}")
    g = space.graph
    y1 = g.check_point(y1)
    y2 = g.check_point(y2)
    for y in (y1, y2):
        if y not in space.Y:
            raise InvalidQueryError(f"endpoint {y} is not on Y")
    if y1 == y2:
        trivial = ParamPath(points=(y1,), cumulative=(0.0,))
        return 0.0, DetourWitness(endpoints=(y1, y2), L=L, B=0.0, path=trivial)

    d = g.distance(y1, y2)
    budget = L * d * (1 + GEODESIC_ATOL)
    dy = _dist_to_y(space)
    levels = np.unique(dy[(dy > 0) & (dy < d / 2)])
    for B in levels[::-1].tolist():
        found = avoid_shortest_path(g, y1, y2, _forbidden(space, dy, B, y1, y2), limit=budget)
        if found is None:
            continue
        path, _ = found
        witness = DetourWitness(
            endpoints=(y1, y2), L=L, B=B, path=path, certified_qg=_certify(space, path, d)
        )
        return B, witness

    path = geodesic(g, y1, y2)
    return 0.0, DetourWitness(endpoints=(y1, y2), L=L, B=0.0, path=path, certified_qg=(1.0, path))


def endpoint_pairs(space: MarkedSpace, plan: PairPlan) -> list[tuple[float, int, int]]:
    """
    (separation, y1, y2) triples along gamma, sorted by separation then y1.

    Separations are geometric between `min_separation` (default twice the
    resolution) and `max_separation` (default twice the valid radius, capped
    by the length of gamma).
    """
    gamma = space.gamma
    res = space.graph.resolution
    if gamma is None:
        # no order on Y: seeded pairs of members, separation = distance
        rng = np.random.default_rng(plan.seed)
        ys = space.Y.as_array()
        if ys.size < 2:
            return []
        k = min(plan.separations * plan.anchors, ys.size * (ys.size - 1) // 2)
        out: set[tuple[float, int, int]] = set()
        while len(out) < k:
            a, b = sorted(int(v) for v in rng.choice(ys, size=2, replace=False))
            out.add((space.graph.distance(a, b), a, b))
        return sorted(out)

    lo = plan.min_separation or 2 * res
    hi = plan.max_separation or min(2 * space.valid_radius, gamma.length)
    if hi < lo:
        raise InvalidParamsError(f"separation window [{lo:g}, {hi:g}] is empty")
    seps = np.unique(np.round(np.geomspace(lo, hi, plan.separations) / res) * res)
    c = np.asarray(gamma.cumulative)
    rng = np.random.default_rng(plan.seed)
    triples: list[tuple[float, int, int]] = []
    for sep in seps.tolist():
        starts = np.flatnonzero(c + sep <= c[-1] + GEODESIC_ATOL)
        if not starts.size:
            continue
        pick = starts if starts.size <= plan.anchors else rng.choice(starts, plan.anchors, replace=False)
        for k in np.sort(pick).tolist():
            m = int(np.searchsorted(c, c[k] + sep - GEODESIC_ATOL))
            if m < c.size and abs(c[m] - c[k] - sep) <= GEODESIC_ATOL * max(1.0, sep):
                triples.append((float(sep), int(gamma.points[k]), int(gamma.points[m])))
    return sorted(set(triples))


def morse_profile(
    space: MarkedSpace,
    L_grid: Sequence[float],
    pair_plan: PairPlan | None = None,
    *,
    jobs: int | None = 1,
) -> Profile:
    """mu_hat(L) = max over sampled endpoint pairs of detour_bound."""
    plan = pair_plan or PairPlan()
    grid = sorted(set(float(L) for L in L_grid))
    if not grid or grid[0] < 1:
        raise InvalidParamsError("L grid must be non-empty with every L >= 1")
    pairs = endpoint_pairs(space, plan)
    t0 = monotonic_ms()
    cells = [(L, y1, y2) for L in grid for (_, y1, y2) in pairs]
    results = ordered_map(lambda c: detour_bound(space, c[1], c[2], c[0])[0], cells, jobs=jobs)

    best: dict[float, tuple[float, tuple[int, ...]] | None] = {L: None for L in grid}
    for (L, y1, y2), B in zip(cells, results):
        best[L] = better_max(best[L], (B, (y1, y2)))
    samples = tuple(
        ProfileSample(r=L, value=cell[0] if cell else 0.0, witness=cell[1] if cell else None)
        for L, cell in best.items()
    )
    log.info(
        "morse profile",
        family=space.family.value,
        pairs=len(pairs),
        L=grid,
        duration_ms=monotonic_ms() - t0,
    )
    return Profile(
        kind=ProfileKind.MORSE,
        samples=samples,
        params={"pair_plan": plan.to_dict(), "pairs": len(pairs)},
        valid_radius=space.valid_radius,
    )


def morse_separation_profile(
    space: MarkedSpace,
    L: float,
    pair_plan: PairPlan | None = None,
    *,
    jobs: int | None = 1,
) -> Profile:
    """mu_hat at fixed L as a function of endpoint separation."""
    plan = pair_plan or PairPlan()
    pairs = endpoint_pairs(space, plan)
    results = ordered_map(lambda t: detour_bound(space, t[1], t[2], L)[0], pairs, jobs=jobs)
    best: dict[float, tuple[float, tuple[int, ...]] | None] = {}
    for (sep, y1, y2), B in zip(pairs, results):
        best[sep] = better_max(best.get(sep), (B, (y1, y2)))
    samples = tuple(
        ProfileSample(r=sep, value=cell[0], witness=cell[1])
        for sep, cell in sorted(best.items())
        if cell is not None
    )
    return Profile(
        kind=ProfileKind.MORSE_SEPARATION,
        samples=samples,
        params={"L": float(L), "pair_plan": plan.to_dict(), "pairs": len(pairs)},
        valid_radius=space.valid_radius,
    )


def classify_morse(profile: Profile) -> MorseVerdict:
    """Morse verdict from the growth class of a separation profile."""
    samples = profile.finite()
    if samples is None:
        return MorseVerdict.INCONCLUSIVE
    coarse = classify_growth(samples).coarse
    if coarse in (CoarseClass.BOUNDED, CoarseClass.SUBLINEAR):
        return MorseVerdict.MORSE
    if coarse in (CoarseClass.LINEAR, CoarseClass.SUPERLINEAR):
        return MorseVerdict.NOT_MORSE
    return MorseVerdict.INCONCLUSIVE
