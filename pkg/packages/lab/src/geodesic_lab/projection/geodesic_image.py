from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterator, Mapping, Sequence

import numpy as np

from ..asymptotics import ConstantBox, FunctionSamples, PreorderFit, preceq_fit
from ..core.errors import InvalidParamsError
from ..core.logging import get_logger
from ..core.parallel import ordered_map
from ..metric import GEODESIC_ATOL, geodesic
from ..spaces import MarkedSpace
from .project import Projector, projector_for
from .types import ProjectionParams, SamplingPlan

log = get_logger(__name__)

PARTNERS_PER_BASE = 8


@dataclass(frozen=True, slots=True)
class GeodesicImageRecord:
    """One sampled geodesic segment [a, b] and the diameter of its projection."""

    a: int
    b: int
    diam_proj: float
    max_endpoint_dist: float
    max_interior_dist: float
    min_dist: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "a": self.a,
            "b": self.b,
            "diam_proj": self.diam_proj,
            "max_endpoint_dist": self.max_endpoint_dist,
            "max_interior_dist": self.max_interior_dist,
            "min_dist": self.min_dist,
        }


@dataclass(frozen=True, slots=True)
class GeodesicImageProfile:
    """
    Segments kept at floor distance C, sorted by (a, b).

    An empty sample is legal and flagged in `diagnostics["empty"]` with a reason.
    """

    C: float
    records: tuple[GeodesicImageRecord, ...]
    diagnostics: Mapping[str, Any]

    @property
    def is_empty(self) -> bool:
        return not self.records

    def __iter__(self) -> Iterator[GeodesicImageRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def __getitem__(self, i: int) -> GeodesicImageRecord:
        return self.records[i]

    def to_dict(self) -> dict[str, Any]:
        return {"kind": "geodesic-image", "C": self.C, "diagnostics": dict(self.diagnostics)}


def segment_record(
    space: MarkedSpace, a: int, b: int, params: ProjectionParams | None = None
) -> GeodesicImageRecord:
    """Projection statistics of the geodesic from a to b."""
    pr = projector_for(space, params or ProjectionParams())
    return _record(pr, int(a), int(b))


def _record(pr: Projector, a: int, b: int) -> GeodesicImageRecord:
    path = geodesic(pr.graph, a, b)
    pts = list(path.points)
    d = pr.dist_to_y[pts]
    union: set[int] = set()
    for s in pr.projections(pts):
        union.update(s)
    return GeodesicImageRecord(
        a=a,
        b=b,
        diam_proj=pr.set_diameter(sorted(union)),
        max_endpoint_dist=float(max(d[0], d[-1])),
        max_interior_dist=float(d.max()),
        min_dist=float(d.min()),
    )


def geodesic_image_profile(
    space: MarkedSpace,
    params: ProjectionParams | None,
    C: float,
    sampling: SamplingPlan | None = None,
    *,
    partners: int = PARTNERS_PER_BASE,
    jobs: int | None = 1,
) -> GeodesicImageProfile:
    """
    Sample geodesic segments with d(segment, Y) >= C and record the diameter
    of their projection plus the two bounding distances.

    Bases come from the sampling plan among vertices at distance >= C from Y.
    Each base a is paired with up to `partners` seeded picks b > a from the
    ball of radius 2*d(a, Y) + C around it; segments that dip below C are
    dropped.
    """
    if not (math.isfinite(C) and C >= 0):
        raise InvalidParamsError(f"C must be >= 0, got {C}")
    params = params or ProjectionParams()
    sampling = sampling or SamplingPlan()
    pr = projector_for(space, params)
    d = pr.dist_to_y
    tol = GEODESIC_ATOL * max(1.0, C)
    candidates = np.flatnonzero((d >= C - tol) & (d > 0))
    if not candidates.size:
        log.warning("no vertices at distance >= C", C=C, family=space.family.value)
        return GeodesicImageProfile(
            C=float(C),
            records=(),
            diagnostics={"empty": True, "reason": "no-vertices-at-distance-C", "bases": 0},
        )
    bases = sampling.choose(candidates, d, landmarks=list(space.landmarks.values()))
    eligible = np.zeros(d.size, dtype=bool)
    eligible[candidates] = True

    rng = np.random.default_rng(sampling.seed)
    pairs: list[tuple[int, int]] = []
    step = space.graph.row_batch_size()
    for start in range(0, bases.size, step):
        batch = bases[start : start + step]
        limit = float((2 * d[batch] + C).max())
        rows = space.graph.limited_rows(batch.tolist(), limit)
        for a, row in zip(batch.tolist(), rows):
            reach = np.flatnonzero((row <= 2 * d[a] + C + tol) & eligible)
            reach = reach[reach > a]
            if reach.size > partners:
                reach = np.sort(rng.choice(reach, size=partners, replace=False))
            pairs.extend((a, int(b)) for b in reach.tolist())

    records = ordered_map(lambda ab: _record(pr, ab[0], ab[1]), pairs, jobs=jobs)
    kept = sorted(
        (rec for rec in records if rec.min_dist >= C - tol), key=lambda rec: (rec.a, rec.b)
    )
    log.info(
        "geodesic image profile",
        family=space.family.value,
        C=C,
        bases=int(bases.size),
        segments=len(pairs),
        kept=len(kept),
    )
    diagnostics: dict[str, Any] = {
        "empty": not kept,
        "bases": int(bases.size),
        "segments": len(pairs),
        "kept": len(kept),
    }
    if not kept:
        diagnostics["reason"] = "no-segment-stays-at-distance-C"
        log.warning("no geodesic segment kept", C=C, family=space.family.value)
    return GeodesicImageProfile(C=float(C), records=tuple(kept), diagnostics=diagnostics)


def record_envelope(
    records: Sequence[GeodesicImageRecord], *, interior: bool = False
) -> FunctionSamples | None:
    """Largest diam_proj per bounding distance, as a running max."""
    if not records:
        return None
    by_r: dict[float, float] = {}
    for rec in records:
        r = rec.max_interior_dist if interior else rec.max_endpoint_dist
        by_r[r] = max(by_r.get(r, 0.0), rec.diam_proj)
    rs = sorted(by_r)
    return FunctionSamples.of(rs, [by_r[r] for r in rs]).running_max()


@dataclass(frozen=True, slots=True)
class GeodesicImageCheck:
    endpoint_fit: PreorderFit | None
    interior_fit: PreorderFit | None
    segments: int

    @property
    def ok(self) -> bool:
        return self.endpoint_fit is not None and self.interior_fit is not None

    def to_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "segments": self.segments,
            "endpoint_fit": self.endpoint_fit.to_dict() if self.endpoint_fit else None,
            "interior_fit": self.interior_fit.to_dict() if self.interior_fit else None,
        }


def check_geodesic_image(
    records: Sequence[GeodesicImageRecord],
    rho: FunctionSamples,
    box: ConstantBox | None = None,
) -> GeodesicImageCheck:
    """
    diam_proj against a contraction function rho: bounded by a rescaling of
    rho at the larger endpoint distance, and at the largest interior distance.

    An empty record set passes vacuously.
    """
    if not records:
        fit = PreorderFit(C1=1.0, C2=1.0, C3=0.0, C4=0.0)
        return GeodesicImageCheck(endpoint_fit=fit, interior_fit=fit, segments=0)
    ends = record_envelope(records)
    inner = record_envelope(records, interior=True)
    assert ends is not None and inner is not None
    return GeodesicImageCheck(
        endpoint_fit=preceq_fit(ends, rho, box),
        interior_fit=preceq_fit(inner, rho, box),
        segments=len(records),
    )
