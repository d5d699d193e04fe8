from __future__ import annotations

import itertools

import numpy as np

from .types import ConstantBox, FunctionSamples, PreorderFit

DEFAULT_BOX = ConstantBox()


def box_order_key(c: tuple[float, float, float, float]) -> tuple[float, ...]:
    # smallest overall multiplicative scale first, then lexicographic
    return (max(c[0], c[1]), c[0], c[1], c[2], c[3])


def preceq_fit(
    f: FunctionSamples,
    g: FunctionSamples,
    box: ConstantBox | None = None,
    *,
    atol: float = 1e-9,
) -> PreorderFit | None:
    """
    Search the box for constants with f(r) <= C1*g(C2*r + C3) + C4 at every
    sample of f. g is extended by linear interpolation and held constant
    outside its sampled range.

    Returns the admissible constants that come first in the order
    (max(C1, C2), C1, C2, C3, C4), or None.
    """
    box = box or DEFAULT_BOX
    fr, fv = f.arrays()
    gr, gv = g.arrays()
    if fr[-1] < gr[0] or gr[-1] < fr[0]:
        return None

    combos = sorted(itertools.product(box.C1, box.C2, box.C3, box.C4), key=box_order_key)
    # g evaluated once per (C2, C3)
    inner: dict[tuple[float, float], np.ndarray] = {}
    for c1, c2, c3, c4 in combos:
        key = (c2, c3)
        gv_at = inner.get(key)
        if gv_at is None:
            gv_at = np.interp(c2 * fr + c3, gr, gv)
            inner[key] = gv_at
        excess = fv - (c1 * gv_at + c4)
        if float(excess.max()) <= atol * max(1.0, float(np.abs(fv).max())):
            return PreorderFit(C1=c1, C2=c2, C3=c3, C4=c4, residual=0.0)
    return None


def preceq_residual(
    f: FunctionSamples, g: FunctionSamples, fit: PreorderFit
) -> float:
    """Largest violation of the fitted inequality (0 when it holds)."""
    fr, fv = f.arrays()
    return float(max(0.0, (fv - fit.bound(g, fr)).max()))


def asymp_equivalent(
    f: FunctionSamples, g: FunctionSamples, box: ConstantBox | None = None
) -> tuple[PreorderFit | None, PreorderFit | None]:
    """Both directions of the preorder on the shared window."""
    lo = max(f.r[0], g.r[0])
    hi = min(f.r[-1], g.r[-1])
    if lo > hi:
        return None, None
    return preceq_fit(f.restrict(lo, hi), g, box), preceq_fit(g.restrict(lo, hi), f, box)
