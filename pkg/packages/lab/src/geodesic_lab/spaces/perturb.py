from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core.errors import InvalidParamsError
from ..core.logging import get_logger
from ..metric import PointSet, hausdorff_distance
from .types import MarkedSpace

log = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class PerturbedSubspace:
    space: MarkedSpace
    requested_radius: float
    realized_hausdorff: float
    seed: int


def perturb_subspace(
    s: MarkedSpace, radius: float, seed: int, *, batch: int = 256
) -> PerturbedSubspace:
    """
    Replace every y in Y by a vertex drawn uniformly from its closed
    radius-ball, so the new subspace stays within Hausdorff distance `radius`.
    """
    if not radius >= 0:
        raise InvalidParamsError(f"radius must be >= 0, got {radius}")
    rng = np.random.default_rng(seed)
    g = s.graph
    members = s.Y.members
    chosen: list[int] = []
    for lo in range(0, len(members), batch):
        chunk = members[lo : lo + batch]
        rows = g.limited_rows(chunk, radius)
        for row in rows:
            ball = np.flatnonzero(row <= radius)
            chosen.append(int(ball[rng.integers(ball.size)]))

    Y2 = PointSet.of(chosen)
    realized = hausdorff_distance(g, s.Y, Y2)
    log.info(
        "subspace perturbed",
        family=s.family.value,
        radius=radius,
        realized=realized,
        y_size=len(Y2),
        seed=seed,
    )
    return PerturbedSubspace(
        space=s.with_subspace(Y2, note=f"perturbed(radius={radius:g}, seed={seed})"),
        requested_radius=float(radius),
        realized_hausdorff=realized,
        seed=int(seed),
    )
