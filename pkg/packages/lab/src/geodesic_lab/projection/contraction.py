from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from ..asymptotics import WindowVerdict, ratio_trend
from ..core.errors import InvalidComparisonError, InvalidParamsError, WindowViolationError
from ..core.logging import get_logger
from ..core.parallel import better_max, chunked, ordered_map
from ..core.time import monotonic_ms
from ..functions import FunctionSpec, as_function
from ..metric import GEODESIC_ATOL
from ..spaces import MarkedSpace
from .project import Projector, projector_for
from .types import (
    ContractionHypothesis,
    Profile,
    ProfileKind,
    ProfileSample,
    ProjectionParams,
    SamplingPlan,
    radius_grid,
)

log = get_logger(__name__)

_BASE_BATCH = 64

Cell = tuple[float, tuple[int, ...]]


def check_window(space: MarkedSpace, r_max: float) -> None:
    if r_max > space.valid_radius + GEODESIC_ATOL * max(1.0, space.valid_radius):
        raise WindowViolationError(
            f"r_max={r_max:g} exceeds valid_radius={space.valid_radius:g} "
            f"for {space.family.value}"
        )


def _best_partner(
    pr: Projector, x: int, ball: np.ndarray, limit: float
) -> Cell:
    """max over y in ball of diam(pi(x) | pi(y)), smallest y on ties."""
    px = pr.projection(x)
    diam_x = pr.set_diameter(px)
    if ball.size == 1:
        return diam_x, (x, int(ball[0]))

    first, size = pr.labels(ball)
    rows = pr.graph.limited_rows(list(px), limit)
    cross = rows[:, first].max(axis=0)
    diam_ball = np.zeros(ball.size, dtype=np.float64)
    # singleton projections are covered by `first`; the rest need their members
    for k in np.flatnonzero(size > 1).tolist():
        members = pr.projection(int(ball[k]))
        cross[k] = float(rows[:, list(members)].max())
        diam_ball[k] = pr.set_diameter(members)
    pair = np.maximum(np.maximum(cross, diam_ball), diam_x)
    k = int(np.argmax(pair))
    return float(pair[k]), (x, int(ball[k]))


def _sweep_batch(pr: Projector, rho1: FunctionSpec, batch: Sequence[int]) -> list[Cell | None]:
    d = pr.dist_to_y
    eps = pr.epsilon
    radii = rho1.evaluate(d[list(batch)])
    limit = float(max(radii.max(), 0.0))
    rows = pr.graph.limited_rows(list(batch), limit * (1 + GEODESIC_ATOL) + GEODESIC_ATOL)
    out: list[Cell | None] = []
    for x, rad, row in zip(batch, radii.tolist(), rows):
        if rad < -GEODESIC_ATOL:
            out.append(None)
            continue
        ball = np.flatnonzero(row <= rad + GEODESIC_ATOL * max(1.0, rad))
        far = float(d[ball].max()) if ball.size else 0.0
        # bound on d(a, b) for a in pi(x), b in pi(ball)
        cross_limit = d[x] + eps + rad + far + eps
        out.append(_best_partner(pr, int(x), ball, cross_limit * (1 + 1e-9) + 1e-9))
    return out


def contraction_profile(
    space: MarkedSpace,
    params: ProjectionParams | None,
    rho1: FunctionSpec | str,
    r_max: float,
    sampling: SamplingPlan | None = None,
    *,
    r_grid: Sequence[float] | None = None,
    jobs: int | None = 1,
) -> Profile:
    """
    value(r) = max of diam(pi(x) | pi(y)) over sampled bases x with
    d(x, Y) <= r and partners y with d(x, y) <= rho1(d(x, Y)).

    Each base contributes its best partner; the profile is the running max
    of those cells in (d(x, Y), x) order.
    """
    params = params or ProjectionParams()
    sampling = sampling or SamplingPlan()
    rho1 = as_function(rho1)
    check_window(space, r_max)
    grid = sorted(set(float(r) for r in (r_grid or radius_grid(r_max, space.graph.resolution))))
    if not grid:
        raise InvalidParamsError("empty radius grid")
    if grid[-1] > r_max + GEODESIC_ATOL * max(1.0, r_max):
        raise WindowViolationError(f"radius grid reaches {grid[-1]:g} beyond r_max={r_max:g}")

    t0 = monotonic_ms()
    pr = projector_for(space, params)
    d = pr.dist_to_y
    tol = GEODESIC_ATOL * max(1.0, r_max)
    candidates = np.flatnonzero(d <= r_max + tol)
    bases = sampling.choose(candidates, d, landmarks=list(space.landmarks.values()))

    # batch bases with similar ball radii together
    order = bases[np.lexsort((bases, rho1.evaluate(d[bases])))]
    batches = chunked(order.tolist(), space.graph.row_batch_size(_BASE_BATCH))
    results = ordered_map(lambda b: _sweep_batch(pr, rho1, b), batches, jobs=jobs)
    cells: dict[int, Cell] = {}
    for batch, res in zip(batches, results):
        for x, cell in zip(batch, res):
            if cell is not None:
                cells[x] = cell

    # running max over bases sorted by (d(x, Y), x)
    xs = np.asarray(sorted(cells), dtype=np.int64)
    xs = xs[np.lexsort((xs, d[xs]))] if xs.size else xs
    samples: list[ProfileSample] = []
    best: Cell | None = None
    k = 0
    for r in grid:
        while k < xs.size and d[xs[k]] <= r + GEODESIC_ATOL * max(1.0, r):
            best = better_max(best, cells[int(xs[k])])
            k += 1
        if best is None:
            samples.append(ProfileSample(r=r, value=0.0, witness=None))
        else:
            samples.append(ProfileSample(r=r, value=best[0], witness=best[1]))

    log.info(
        "contraction profile",
        family=space.family.value,
        vertices=space.graph.vertex_count,
        bases=int(bases.size),
        exhaustive=sampling.is_exhaustive(candidates.size),
        radii=len(grid),
        duration_ms=monotonic_ms() - t0,
    )
    return Profile(
        kind=ProfileKind.CONTRACTION,
        samples=tuple(samples),
        params={
            "epsilon": params.epsilon,
            "rho1": rho1.to_text(),
            "r_max": float(r_max),
            "sampling": sampling.to_dict(),
            "bases": int(bases.size),
            "exhaustive": sampling.is_exhaustive(candidates.size),
        },
        valid_radius=space.valid_radius,
    )


@dataclass(frozen=True, slots=True)
class ContractionViolation:
    r: float
    value: float
    bound: float
    witness: tuple[int, ...] | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "r": self.r,
            "value": self.value,
            "bound": self.bound,
            "witness": list(self.witness) if self.witness else None,
        }


@dataclass(frozen=True, slots=True)
class ContractionCheck:
    ok: bool
    violations: tuple[ContractionViolation, ...]
    ratio_verdict: WindowVerdict
    diagnostics: dict[str, float]

    def to_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "violations": [v.to_dict() for v in self.violations],
            "ratio_verdict": self.ratio_verdict.value,
            "diagnostics": dict(self.diagnostics),
        }


def check_contracting(
    profile: Profile, hypothesis: ContractionHypothesis, *, slack: float = 0.0
) -> ContractionCheck:
    """
    value(r) <= rho2(r) at every sample, and rho2/rho1 shrinking over the
    upper half of the sampled radii.
    """
    if profile.kind is not ProfileKind.CONTRACTION:
        raise InvalidComparisonError(f"expected a contraction profile, got {profile.kind.value}")
    if profile.params.get("rho1") != hypothesis.rho1.to_text():
        raise InvalidComparisonError(
            f"profile was computed with rho1={profile.params.get('rho1')}, "
            f"hypothesis has rho1={hypothesis.rho1.to_text()}"
        )

    violations: list[ContractionViolation] = []
    for s in profile.samples:
        if s.value is None:
            continue
        bound = hypothesis.rho2(s.r)
        if s.value > bound + slack + GEODESIC_ATOL * max(1.0, bound):
            violations.append(ContractionViolation(s.r, s.value, bound, s.witness))

    r = np.asarray(profile.r, dtype=np.float64)
    r1 = hypothesis.rho1.evaluate(r)
    keep = (r1 > 0) & (r >= hypothesis.domain_start)
    if keep.sum() >= 2:
        ratio = hypothesis.rho2.evaluate(r[keep]) / r1[keep]
        verdict, diag = ratio_trend(r[keep], ratio)
    else:
        verdict, diag = WindowVerdict.INCONCLUSIVE, {}

    ok = not violations and verdict is WindowVerdict.SUBLINEAR
    return ContractionCheck(
        ok=ok, violations=tuple(violations), ratio_verdict=verdict, diagnostics=diag
    )
