from __future__ import annotations

import itertools

import numpy as np

from ..asymptotics import ConstantBox
from ..asymptotics.preorder import DEFAULT_BOX, box_order_key
from ..core.logging import get_logger
from .types import DivergenceProfile, SuperlinearReport, SuperlinearVerdict

log = get_logger(__name__)

MIN_TAIL = 4
# how far past the window an affine bound must keep up
SUPERLINEAR_HORIZON = 16.0


def completely_superlinear_test(
    profile: DivergenceProfile,
    box: ConstantBox | None = None,
    *,
    horizon: float = SUPERLINEAR_HORIZON,
) -> SuperlinearReport:
    """
    Look for an affine l(r) = C1*(C2*r + C3) + C4 from the box that captures
    the profile on at least half of the tail window (top half of the radii)
    and still captures it when the ratio Delta/l is extrapolated out to
    `horizon` times the largest radius. Such an l is a linear witness.

    Infinite samples are never captured. An all-infinite profile is
    superlinear on the window.
    """
    box = box or DEFAULT_BOX
    samples = profile.samples
    if profile.all_infinite:
        return SuperlinearReport(SuperlinearVerdict.SUPERLINEAR, diagnostics={"reason": "all-infinite"})
    tail = samples[len(samples) // 2 :]
    if len(tail) < MIN_TAIL:
        return SuperlinearReport(
            SuperlinearVerdict.INCONCLUSIVE, diagnostics={"reason": "short-tail", "tail": len(tail)}
        )

    r = np.asarray([s.r for s in tail], dtype=np.float64)
    finite = np.asarray([s.value is not None for s in tail])
    v = np.asarray([s.value if s.value is not None else np.inf for s in tail], dtype=np.float64)
    r_far = horizon * float(r[-1])
    need = (len(tail) + 1) // 2

    for c in sorted(itertools.product(box.C1, box.C2, box.C3, box.C4), key=box_order_key):
        c1, c2, c3, c4 = c
        ell = c1 * (c2 * r + c3) + c4
        captured = finite & (v <= ell * (1 + 1e-12))
        if int(captured.sum()) < need:
            continue
        rc = r[captured]
        ratio = v[captured] / ell[captured]
        if rc.size >= 2 and np.all(ratio > 0) and np.ptp(np.log(rc)) > 0:
            slope, icept = np.polyfit(np.log(rc), np.log(ratio), 1)
            far_ratio = float(np.exp(icept + slope * np.log(r_far)))
        else:
            far_ratio = float(ratio.max())
        if far_ratio < 1.0:
            witness = tuple(float(x) for x in rc)
            log.debug("linear witness", constants=c, captured=len(witness), far_ratio=far_ratio)
            return SuperlinearReport(
                SuperlinearVerdict.LINEAR_WITNESS,
                witness_r=witness,
                constants=c,
                diagnostics={"far_ratio": far_ratio, "horizon": r_far},
            )

    return SuperlinearReport(
        SuperlinearVerdict.SUPERLINEAR,
        diagnostics={"tail": len(tail), "horizon": r_far},
    )
