from __future__ import annotations

from typing import Sequence

import numpy as np

from ..asymptotics import ConstantBox, FunctionSamples, classify_growth, preceq_fit
from ..core.logging import get_logger
from ..spaces import MarkedSpace
from .profile import divergence_profile
from .types import DivergenceParams, DivergenceProfile, RobustnessReport, RobustnessVerdict

log = get_logger(__name__)


def _shared_finite(
    p: DivergenceProfile, q: DivergenceProfile
) -> tuple[FunctionSamples, FunctionSamples] | None:
    qv = {s.r: s.value for s in q.samples}
    rs: list[float] = []
    a: list[float] = []
    b: list[float] = []
    for s in p.samples:
        other = qv.get(s.r)
        if s.value is not None and other is not None:
            rs.append(s.r)
            a.append(s.value)
            b.append(other)
    if not rs:
        return None
    return FunctionSamples.of(rs, a), FunctionSamples.of(rs, b)


def compare_divergence(
    first: DivergenceProfile,
    second: DivergenceProfile,
    box: ConstantBox | None = None,
) -> RobustnessReport:
    """
    Mutual preorder fits of two divergence profiles on the radii where both
    are finite. Infinite at the same radii on both sides counts as agreement.
    """
    inf_first = {s.r for s in first.samples if s.value is None}
    inf_second = {s.r for s in second.samples if s.value is None}
    shared = _shared_finite(first, second)
    if shared is None:
        verdict = (
            RobustnessVerdict.EQUIVALENT
            if inf_first == inf_second
            else RobustnessVerdict.NOT_EQUIVALENT
        )
        return RobustnessReport(first, second, None, None, None, None, verdict)

    f, g = shared
    fg = preceq_fit(f, g, box)
    gf = preceq_fit(g, f, box)
    ok = fg is not None and gf is not None
    report = RobustnessReport(
        first=first,
        second=second,
        fit_first_second=fg,
        fit_second_first=gf,
        class_first=classify_growth(f),
        class_second=classify_growth(g),
        verdict=RobustnessVerdict.EQUIVALENT if ok else RobustnessVerdict.NOT_EQUIVALENT,
    )
    log.info(
        "divergence robustness",
        params=[first.params.to_text(), second.params.to_text()],
        verdict=report.verdict.value,
        window=[float(np.min(f.r)), float(np.max(f.r))],
    )
    return report


def parameter_robustness_check(
    space: MarkedSpace,
    dp1: DivergenceParams,
    dp2: DivergenceParams,
    r_grid: Sequence[float],
    s_grid: Sequence[float] | None = None,
    *,
    box: ConstantBox | None = None,
    jobs: int | None = 1,
) -> RobustnessReport:
    p1 = divergence_profile(space, dp1, r_grid, s_grid, jobs=jobs)
    p2 = p1 if dp2 == dp1 else divergence_profile(space, dp2, r_grid, s_grid, jobs=jobs)
    return compare_divergence(p1, p2, box)
