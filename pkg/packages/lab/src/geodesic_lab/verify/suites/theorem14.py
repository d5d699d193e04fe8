"""
Contraction versus Morse: a subspace with sublinear contraction is Morse,
and the explicit bound calculators on both sides of that equivalence.
"""

from __future__ import annotations

import math

import numpy as np

from ...asymptotics import CoarseClass, FunctionSamples
from ...core.errors import NotVerifiableError
from ...core.logging import get_logger
from ...functions import FunctionSpec
from ...metric import GEODESIC_ATOL, QGParams, geodesic, is_quasigeodesic, triangle_thinness
from ...morse import (
    MorseVerdict,
    PairPlan,
    classify_morse,
    contraction_bound_from_morse,
    degradation,
    morse_bound_from_contraction,
    morse_separation_profile,
    shortcut_report,
)
from ...projection import ProjectionParams, projector_for
from ...spaces import Family, MarkedSpace
from ..builtin import Scale
from ..types import CheckResult, Severity
from .common import (
    SUBLINEAR_OR_BOUNDED,
    SuiteContext,
    check,
    fit_dict,
    fit_label,
    fit_severity,
)

log = get_logger(__name__)

SPACES = ("tree", "log_space", "necklace", "grid")
NON_EXAMPLES = frozenset({Family.GRID_L1})
MORSE_L = 2.0
SHORTCUT_SPACES = frozenset({Family.GRID_L1, Family.NECKLACE})
SHORTCUT_TRIALS = {Scale.QUICK: 40, Scale.ACCEPTANCE: 200}
THIN_TRIANGLES = 24
CALCULATORS = "(calculators)"


def _contraction_checks(
    ctx: SuiteContext, name: str, space: MarkedSpace
) -> tuple[list[CheckResult], CoarseClass]:
    non_example = space.family in NON_EXAMPLES
    profile = ctx.contraction(name, space)
    fit = ctx.classify(profile)
    coarse = fit.coarse if fit is not None else CoarseClass.INCONCLUSIVE
    out = [
        check(
            "CONTRACTION_SUBLINEAR",
            name,
            coarse in SUBLINEAR_OR_BOUNDED,
            f"rho1=id contraction profile is {fit_label(fit)} on [0, {space.valid_radius:g}]",
            non_example=non_example,
            severity=fit_severity(fit),
            details={"fit": fit_dict(fit)},
        )
    ]

    # rho2 = sampled profile; E comes from the grid tail
    samples = profile.finite()
    if samples is not None:
        r, v = samples.arrays()
        try:
            bound = morse_bound_from_contraction(
                "id", FunctionSpec.sampled(r, v), 0.0, 1.0, 0.0, r.tolist()
            )
            out.append(
                check(
                    "MORSE_BOUND_FROM_CONTRACTION",
                    name,
                    True,
                    f"explicit Morse bound B={bound.B:g} at E={bound.E:g}",
                    severity=Severity.WARN,
                    non_example=non_example,
                    details=bound.to_dict(),
                )
            )
        except NotVerifiableError as e:
            out.append(
                check(
                    "MORSE_BOUND_FROM_CONTRACTION",
                    name,
                    False,
                    str(e),
                    severity=Severity.WARN,
                    non_example=non_example,
                )
            )
    return out, coarse


def _morse_checks(
    ctx: SuiteContext, name: str, space: MarkedSpace
) -> tuple[list[CheckResult], MorseVerdict]:
    plan = PairPlan(seed=ctx.cfg.seed)
    profile = morse_separation_profile(space, MORSE_L, plan, jobs=ctx.jobs)
    ctx.save(f"{name}.morse-separation", profile)
    verdict = classify_morse(profile)
    fit = ctx.classify(profile)
    return [
        check(
            "MORSE_ON_WINDOW",
            name,
            verdict is MorseVerdict.MORSE,
            f"detour bound at L={MORSE_L:g} against separation is "
            f"{fit_label(fit)}: {verdict.value}",
            severity=Severity.WARN if verdict is MorseVerdict.INCONCLUSIVE else Severity.ERROR,
            non_example=space.family in NON_EXAMPLES,
            details={"fit": fit_dict(fit), "pairs": profile.params.get("pairs")},
        )
    ], verdict


def _agreement(name: str, coarse: CoarseClass, verdict: MorseVerdict) -> CheckResult:
    if coarse is CoarseClass.INCONCLUSIVE or verdict is MorseVerdict.INCONCLUSIVE:
        return check(
            "CONTRACTION_MORSE_AGREEMENT",
            name,
            False,
            f"cannot compare: contraction {coarse.value}, morse {verdict.value}",
            severity=Severity.WARN,
        )
    sublinear = coarse in SUBLINEAR_OR_BOUNDED
    morse = verdict is MorseVerdict.MORSE
    return check(
        "CONTRACTION_MORSE_AGREEMENT",
        name,
        sublinear == morse,
        f"contraction {coarse.value} and {verdict.value} "
        + ("agree" if sublinear == morse else "disagree"),
    )


def _shortcut_checks(ctx: SuiteContext, name: str, space: MarkedSpace) -> CheckResult:
    """Shortcut random concatenations of three geodesics and certify the outputs."""
    g = space.graph
    rng = np.random.default_rng(ctx.cfg.seed)
    res = g.resolution
    trials = SHORTCUT_TRIALS[ctx.scale]
    done = 0
    for _ in range(trials * 4):
        if done >= trials:
            break
        corners = [int(v) for v in rng.integers(0, g.vertex_count, size=4)]
        if corners[0] == corners[-1]:
            continue
        path = geodesic(g, corners[0], corners[1])
        for a, b in zip(corners[1:], corners[2:]):
            path = path.concat(geodesic(g, a, b))
        d = g.distance(corners[0], corners[-1])
        L = max(1.0, math.ceil(path.length / d))
        result = shortcut_report(g, path, L)
        out = result.path
        done += 1
        problems: list[str] = []
        if (out.start, out.end) != (path.start, path.end):
            problems.append("endpoints moved")
        if out.length > path.length + GEODESIC_ATOL * max(1.0, path.length):
            problems.append("length grew")
        if not is_quasigeodesic(g, out, QGParams(L=L), slack=res):
            problems.append(f"not an ({L:g}, 0)-quasi-geodesic")
        drift = degradation(g, path, out)
        if drift > path.length / (2 * L) + res:
            problems.append(f"degradation {drift:g} > |gamma|/(2L)")
        if result.replaced_count > 2:
            problems.append(f"{result.replaced_count} stretches replaced, expected at most 2")
        if problems:
            return check(
                "SHORTCUT_CERTIFIED",
                name,
                False,
                "; ".join(problems),
                witness={"corners": corners, "L": L},
            )
    return check(
        "SHORTCUT_CERTIFIED",
        name,
        done > 0,
        f"{done} shortcut outputs certified",
        details={"trials": done},
    )


def _thinness_check(
    ctx: SuiteContext, name: str, space: MarkedSpace, coarse: CoarseClass
) -> CheckResult:
    """
    Triangles with two corners on Y and one off it, at growing size. Bounded
    contraction with growing thinness is flagged; everything else is reported.
    """
    g = space.graph
    pr = projector_for(space, ProjectionParams())
    d = pr.dist_to_y
    off = np.flatnonzero((d > 0) & (d <= space.valid_radius))
    ys = space.Y.as_array()
    if not off.size or ys.size < 2:
        return check(
            "TRIANGLE_THINNESS", name, True, "no triangles to sample", severity=Severity.WARN
        )
    rng = np.random.default_rng(ctx.cfg.seed)
    by_size: dict[float, float] = {}
    witness: dict[float, tuple[int, int, int]] = {}
    for x in np.sort(rng.choice(off, size=min(THIN_TRIANGLES, off.size), replace=False)).tolist():
        y1 = pr.projection(int(x))[0]
        y2 = int(rng.choice(ys))
        if y2 == y1:
            continue
        size = max(g.distance(x, y1), g.distance(y1, y2), g.distance(x, y2))
        delta = triangle_thinness(g, int(x), y1, y2)
        if delta >= by_size.get(size, -1.0):
            by_size[size] = delta
            witness[size] = (int(x), y1, y2)
    if len(by_size) < 2:
        return check(
            "TRIANGLE_THINNESS", name, True, "too few triangle sizes", severity=Severity.WARN
        )
    sizes = sorted(by_size)
    fit = ctx.cfg.classify(FunctionSamples.of(sizes, [by_size[s] for s in sizes]).running_max())
    grows = fit.coarse in (CoarseClass.LINEAR, CoarseClass.SUPERLINEAR)
    worst = max(sizes, key=lambda s: (by_size[s], s))
    return check(
        "TRIANGLE_THINNESS",
        name,
        not (coarse is CoarseClass.BOUNDED and grows),
        f"thinness over {len(sizes)} triangle sizes is {fit.label}",
        severity=Severity.WARN,
        witness={"corners": list(witness[worst]), "thinness": by_size[worst]},
        details={"fit": fit.to_dict()},
    )


def calculator_checks() -> list[CheckResult]:
    """Fixed values of both bound calculators."""
    out: list[CheckResult] = []
    rep = morse_bound_from_contraction("id", "const:0", 0.0, 1.0, 0.0, [1.0, 2.0, 4.0, 8.0])
    got = (rep.E, rep.d_bound, rep.T, rep.B)
    out.append(
        check(
            "MORSE_BOUND_VALUES",
            CALCULATORS,
            got == (1.0, 5.0, 5.0, 3.5),
            f"(E, d, T, B) = {got} for rho1=id, rho2=0, eps=0, L=1, A=0",
            details=rep.to_dict(),
        )
    )
    values = {r: contraction_bound_from_morse("const:0", 1.0, r) for r in (0.0, 1.0, 10.0, 100.0)}
    want = {r: min(4 * r + 2, 12.0) for r in values}
    out.append(
        check(
            "CONTRACTION_BOUND_VALUES",
            CALCULATORS,
            values == want,
            f"rho'(r) for mu=0, eps=1: {values}",
            details={"got": {f"{r:g}": v for r, v in values.items()}},
        )
    )
    return out


def run_theorem14(ctx: SuiteContext, spaces: dict[str, MarkedSpace]) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for name, space in spaces.items():
        log.info("theorem14 space", space=name, family=space.family.value)
        contraction, coarse = _contraction_checks(ctx, name, space)
        morse, verdict = _morse_checks(ctx, name, space)
        checks.extend(contraction)
        checks.extend(morse)
        checks.append(_agreement(name, coarse, verdict))
        if space.family in SHORTCUT_SPACES:
            checks.append(_shortcut_checks(ctx, name, space))
        checks.append(_thinness_check(ctx, name, space, coarse))
    checks.extend(calculator_checks())
    return checks
