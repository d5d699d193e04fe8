"""
Divergence versus contraction: completely superlinear divergence goes with
sublinear contraction, and polynomial divergence r^k bounds contraction by r^(1/k).
"""

from __future__ import annotations

from ...asymptotics import CoarseClass, FitReport, FunctionSamples, preceq_fit
from ...core.logging import get_logger
from ...divergence import (
    DivergenceProfile,
    SuperlinearReport,
    SuperlinearVerdict,
    completely_superlinear_test,
)
from ...functions import FunctionSpec
from ...spaces import Family, MarkedSpace
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

SPACES = ("divergence_necklace", "tree", "grid", "log_space")
POWER_K = 2.0
POWER_WINDOW = (1.8, 2.2)
# rho1 for which the family is (rho1, bounded)-contracting
BOUNDED_RHO1 = {Family.TREE: "id", Family.LOG_SPACE: "lin:0.5"}
# agreement is only asserted where both classes are known to be sharp on the window
AGREEMENT_WARN_ONLY = frozenset({Family.LOG_SPACE})


def _agreement(
    name: str, space: MarkedSpace, report: SuperlinearReport, fit: FitReport | None
) -> CheckResult:
    verdict = report.verdict
    coarse = fit.coarse if fit is not None else CoarseClass.INCONCLUSIVE
    witness = {"witness_r": list(report.witness_r)} if report.witness_r else None
    details = {"superlinear": report.to_dict(), "contraction": fit_dict(fit)}
    severity = Severity.WARN if space.family in AGREEMENT_WARN_ONLY else Severity.ERROR
    if verdict is SuperlinearVerdict.INCONCLUSIVE or coarse is CoarseClass.INCONCLUSIVE:
        return check(
            "DIVERGENCE_CONTRACTION_AGREEMENT",
            name,
            False,
            f"cannot compare: divergence {verdict.value}, contraction {coarse.value}",
            severity=Severity.WARN,
            details=details,
        )
    superlinear = verdict is SuperlinearVerdict.SUPERLINEAR
    sublinear = coarse in SUBLINEAR_OR_BOUNDED
    return check(
        "DIVERGENCE_CONTRACTION_AGREEMENT",
        name,
        superlinear == sublinear,
        f"divergence {verdict.value}, contraction {coarse.value}",
        severity=severity,
        witness=witness,
        details=details,
    )


def _power_checks(
    ctx: SuiteContext, name: str, space: MarkedSpace, div: DivergenceProfile
) -> list[CheckResult]:
    finite = div.finite()
    fit = None if finite is None else ctx.cfg.classify(finite)
    lo, hi = POWER_WINDOW
    ok = fit is not None and fit.exponent is not None and lo <= fit.exponent <= hi
    out = [
        check(
            "DIVERGENCE_POWER",
            name,
            ok,
            f"divergence profile is {fit_label(fit)}, expected exponent in [{lo:g}, {hi:g}]",
            severity=fit_severity(fit),
            details={"fit": fit_dict(fit)},
        )
    ]
    contraction = ctx.contraction(name, space).finite()
    if contraction is None:
        return out
    r = contraction.r
    root = FunctionSamples.from_function(FunctionSpec.parse(f"pow:{1 / POWER_K:g}"), r)
    found = preceq_fit(contraction, root, ctx.cfg.box())
    out.append(
        check(
            "CONTRACTION_BELOW_ROOT",
            name,
            found is not None,
            f"contraction profile {'<=' if found else 'not <='} "
            f"r^(1/{POWER_K:g}) up to box constants",
            details={"fit": found.to_dict() if found else None},
        )
    )
    return out


def _rho1_lower_bound(
    ctx: SuiteContext, name: str, space: MarkedSpace, div: DivergenceProfile
) -> CheckResult:
    """r * rho1(r) below the divergence for (rho1, bounded)-contracting gamma."""
    rho1 = BOUNDED_RHO1[space.family]
    profile = ctx.contraction(name, space, rho1=rho1)
    fit = ctx.classify(profile)
    if fit is None or fit.coarse is not CoarseClass.BOUNDED:
        return check(
            "DIVERGENCE_ABOVE_R_RHO1",
            name,
            False,
            f"rho1={rho1} profile is {fit_label(fit)}, not bounded",
            severity=Severity.WARN,
        )
    finite = div.finite()
    if finite is None:
        return check(
            "DIVERGENCE_ABOVE_R_RHO1",
            name,
            True,
            "divergence is infinite on the whole window",
            severity=Severity.WARN,
        )
    fn = FunctionSpec.parse(rho1)
    lower = FunctionSamples.of(finite.r, [r * fn(r) for r in finite.r])
    found = preceq_fit(lower, finite, ctx.cfg.box())
    return check(
        "DIVERGENCE_ABOVE_R_RHO1",
        name,
        found is not None,
        f"r*rho1(r) {'<=' if found else 'not <='} divergence with rho1={rho1}",
        severity=Severity.WARN,
        details={"fit": found.to_dict() if found else None},
    )


def run_theorem15(ctx: SuiteContext, spaces: dict[str, MarkedSpace]) -> list[CheckResult]:
    checks: list[CheckResult] = []
    horizon = ctx.cfg.tolerances.superlinear_horizon
    for name, space in spaces.items():
        log.info("theorem15 space", space=name, family=space.family.value)
        div = ctx.divergence(name, space)
        report = completely_superlinear_test(div, ctx.cfg.box(), horizon=horizon)
        fit = ctx.classify(ctx.contraction(name, space))
        checks.append(_agreement(name, space, report, fit))
        if space.family is Family.DIVERGENCE_NECKLACE:
            checks.extend(_power_checks(ctx, name, space, div))
        if space.family in BOUNDED_RHO1:
            checks.append(_rho1_lower_bound(ctx, name, space, div))
    return checks
