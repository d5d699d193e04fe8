"""
Fitted classes survive the usual perturbations: coarser projections, a
Hausdorff-close Y, a shifted rho1 and other divergence parameters.
"""

from __future__ import annotations

from ...asymptotics import CoarseClass, asymp_equivalent
from ...core.logging import get_logger
from ...divergence import (
    DivergenceParams,
    RobustnessVerdict,
    parameter_robustness_check,
)
from ...projection import Profile
from ...spaces import Family, MarkedSpace, perturb_subspace
from ..types import CheckResult, Severity
from .common import SuiteContext, check, fit_label

log = get_logger(__name__)

SPACES = ("necklace", "log_space", "divergence_necklace")
EPSILONS = (1.0, 2.0)
PERTURB_RADIUS = 2.0
SHIFTS = (1.0, 2.0)
DIVERGENCE_PARAMS = (DivergenceParams(1.0, 0.0, 0.5, 2.0), DivergenceParams(1.0, 0.0, 1.0, 1.0))


def _coarse(ctx: SuiteContext, profile: Profile) -> tuple[CoarseClass, str]:
    fit = ctx.classify(profile)
    return (fit.coarse if fit is not None else CoarseClass.INCONCLUSIVE), fit_label(fit)


def _stable_severity(*classes: CoarseClass) -> Severity:
    if CoarseClass.INCONCLUSIVE in classes:
        return Severity.WARN
    return Severity.ERROR


def _contraction_checks(ctx: SuiteContext, name: str, space: MarkedSpace) -> list[CheckResult]:
    base = ctx.contraction(name, space)
    base_class, base_label = _coarse(ctx, base)
    out: list[CheckResult] = []

    for eps in EPSILONS:
        cls, label = _coarse(ctx, ctx.contraction(name, space, epsilon=eps))
        out.append(
            check(
                "EPSILON_CLASS_STABLE",
                name,
                cls is base_class and cls is not CoarseClass.INCONCLUSIVE,
                f"epsilon={eps:g}: {label} vs {base_label} at epsilon=0",
                severity=_stable_severity(cls, base_class),
                details={"epsilon": eps, "class": cls.value, "base": base_class.value},
            )
        )

    moved = perturb_subspace(space, PERTURB_RADIUS, ctx.cfg.seed)
    cls, label = _coarse(ctx, ctx.contraction(f"{name}.perturbed", moved.space))
    out.append(
        check(
            "PERTURBED_Y_CLASS_STABLE",
            name,
            cls is base_class and cls is not CoarseClass.INCONCLUSIVE,
            f"Y moved by <= {PERTURB_RADIUS:g} (realized {moved.realized_hausdorff:g}): "
            f"{label} vs {base_label}",
            severity=_stable_severity(cls, base_class),
            details={
                "requested_radius": moved.requested_radius,
                "realized_hausdorff": moved.realized_hausdorff,
                "seed": moved.seed,
                "class": cls.value,
                "base": base_class.value,
            },
        )
    )

    base_samples = base.finite()
    for C in SHIFTS:
        shifted = ctx.contraction(name, space, rho1=f"lin:1,{-C:g}")
        cls, label = _coarse(ctx, shifted)
        samples = shifted.finite()
        up, down = (
            asymp_equivalent(samples, base_samples, ctx.cfg.box())
            if samples is not None and base_samples is not None
            else (None, None)
        )
        ok = cls is base_class and up is not None and down is not None
        out.append(
            check(
                "SHIFTED_RHO1_STABLE",
                name,
                ok,
                f"rho1=r-{C:g}: {label} vs {base_label}, "
                + ("comparable" if up is not None and down is not None else "not comparable"),
                severity=_stable_severity(cls, base_class),
                details={
                    "shift": C,
                    "shifted_below_base": up.to_dict() if up else None,
                    "base_below_shifted": down.to_dict() if down else None,
                },
            )
        )
    return out


def _divergence_check(ctx: SuiteContext, name: str, space: MarkedSpace) -> CheckResult:
    first, second = DIVERGENCE_PARAMS
    r_grid, s_grid = ctx.divergence_grid(space)
    report = parameter_robustness_check(
        space,
        first,
        second,
        r_grid,
        s_grid,
        box=ctx.cfg.box(),
        jobs=ctx.jobs,
    )
    ctx.save(f"{name}.divergence-{first.to_text()}", report.first)
    ctx.save(f"{name}.divergence-{second.to_text()}", report.second)
    return check(
        "DIVERGENCE_PARAMS_EQUIVALENT",
        name,
        report.verdict is RobustnessVerdict.EQUIVALENT,
        f"divergence at ({first.to_text()}) and ({second.to_text()}): {report.verdict.value}",
        details=report.to_dict(),
    )


def run_robustness(ctx: SuiteContext, spaces: dict[str, MarkedSpace]) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for name, space in spaces.items():
        log.info("robustness space", space=name, family=space.family.value)
        if space.family is Family.DIVERGENCE_NECKLACE:
            checks.append(_divergence_check(ctx, name, space))
        else:
            checks.extend(_contraction_checks(ctx, name, space))
    return checks
