"""
Abel trade on log spaces: contraction with (rho, 2) is traded for rho1 = id
with rho2 comparable to the step count of x -> x - rho(x).
"""

from __future__ import annotations

from ...asymptotics import GrowthClass, abel_samples, abel_steps, asymp_equivalent
from ...core.errors import InvalidParamsError
from ...core.logging import get_logger
from ...functions import FunctionSpec
from ...projection import ContractionHypothesis, check_contracting
from ...spaces import Family, MarkedSpace, phi_inverse, sigma_sequence
from ..types import CheckResult, Severity
from .common import SuiteContext, check, fit_dict, fit_label

log = get_logger(__name__)

SPACES = ("log_space", "log_space_sqrt", "log_space_minlog2")
# the r/2 example is the one the trade is asserted on; the others are reported
PRIMARY_RHO = "lin:0.5"
MAX_SIGMA_INDEX = 12
FIXED_STEPS = (("lin:0.5", 2.0, 16.0, 4), ("affsqrt:2,-1", 1.0, 9.0, 3))
FIXED = "(abel)"


def _rho_and_A(space: MarkedSpace) -> tuple[FunctionSpec, float]:
    params = space.meta.params
    return FunctionSpec.parse(str(params["rho"])), float(params["A"])


def _sequence_checks(name: str, rho: FunctionSpec, A: float, n: int) -> list[CheckResult]:
    data = sigma_sequence(rho, A, min(n, MAX_SIGMA_INDEX))
    sigma = data.sigma
    steps = [abel_steps(rho, A, s) for s in sigma]
    wrong = [(i, s, k) for i, (s, k) in enumerate(zip(sigma, steps)) if k != i]
    out = [
        check(
            "ABEL_STEPS_ON_SIGMA",
            name,
            not wrong,
            f"abel_steps(sigma(i)) = i for i <= {len(sigma) - 1}"
            if not wrong
            else f"abel_steps(sigma({wrong[0][0]})={wrong[0][1]:g}) = {wrong[0][2]}",
            witness=dict(zip(("i", "sigma", "steps"), wrong[0])) if wrong else None,
            details=data.to_dict(),
        )
    ]

    # sigma points and the midpoints between them
    points = list(sigma[:-1]) + [(a + b) / 2 for a, b in zip(sigma, sigma[1:-1])]
    broken = []
    for x in sorted(points):
        before = abel_steps(rho, A, x)
        after = abel_steps(rho, A, phi_inverse(rho, A, x))
        if after != before + 1:
            broken.append({"x": x, "steps": before, "steps_of_inverse": after})
    out.append(
        check(
            "ABEL_EQUATION",
            name,
            not broken,
            f"abel_steps(phi^-1(x)) = abel_steps(x) + 1 at {len(points)} points",
            witness=broken[0] if broken else None,
        )
    )
    return out


def _profile_checks(
    ctx: SuiteContext, name: str, space: MarkedSpace, rho: FunctionSpec, A: float
) -> list[CheckResult]:
    severity = Severity.ERROR if rho.to_text() == PRIMARY_RHO else Severity.WARN
    out: list[CheckResult] = []

    traded = ctx.contraction(name, space, rho1=rho.to_text())
    hyp = ContractionHypothesis(rho1=rho, rho2=FunctionSpec.constant(2.0), domain_start=A)
    result = check_contracting(traded, hyp)
    first = result.violations[0].to_dict() if result.violations else None
    out.append(
        check(
            "CONTRACTING_RHO_2",
            name,
            result.ok,
            f"(rho1={rho.to_text()}, rho2=2): {len(result.violations)} violations, "
            f"ratio {result.ratio_verdict.value}",
            severity=severity,
            witness=first,
            details=result.to_dict(),
        )
    )

    profile = ctx.contraction(name, space)
    fit = ctx.classify(profile)
    out.append(
        check(
            "ID_PROFILE_LOGARITHMIC",
            name,
            fit is not None and fit.growth_class is GrowthClass.LOGARITHMIC,
            f"rho1=id contraction profile is {fit_label(fit)}",
            severity=Severity.WARN,
            details={"fit": fit_dict(fit)},
        )
    )

    samples = profile.finite()
    if samples is not None:
        alpha = abel_samples(rho, A, samples.r)
        up, down = asymp_equivalent(samples, alpha, ctx.cfg.box())
        out.append(
            check(
                "ID_PROFILE_MATCHES_ABEL",
                name,
                up is not None and down is not None,
                "rho1=id profile and abel step counts are "
                + ("comparable" if up is not None and down is not None else "not comparable")
                + " in both directions",
                severity=severity,
                details={
                    "profile_below_abel": up.to_dict() if up else None,
                    "abel_below_profile": down.to_dict() if down else None,
                },
            )
        )
    return out


def fixed_value_checks() -> list[CheckResult]:
    out = []
    for text, A, x, want in FIXED_STEPS:
        got = abel_steps(FunctionSpec.parse(text), A, x)
        out.append(
            check(
                "ABEL_STEPS_VALUE",
                FIXED,
                got == want,
                f"abel_steps({x:g}) = {got} for rho={text}, A={A:g} (expected {want})",
            )
        )
    return out


def run_abel(ctx: SuiteContext, spaces: dict[str, MarkedSpace]) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for name, space in spaces.items():
        if space.family is not Family.LOG_SPACE:
            raise InvalidParamsError(
                f"abel suite runs on log_space spaces, {name} is {space.family.value}"
            )
        rho, A = _rho_and_A(space)
        log.info("abel space", space=name, rho=rho.to_text(), A=A)
        checks.extend(_sequence_checks(name, rho, A, int(space.meta.params["n"])))
        checks.extend(_profile_checks(ctx, name, space, rho, A))
    checks.extend(fixed_value_checks())
    return checks
