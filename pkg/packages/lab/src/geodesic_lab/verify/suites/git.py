"""Geodesic image checks: projections of geodesics far from Y stay small."""

from __future__ import annotations

from ...asymptotics import CoarseClass
from ...core.logging import get_logger
from ...projection import ProjectionParams, check_geodesic_image, geodesic_image_profile
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

SPACES = ("necklace", "tree")
SEGMENT_C = 4.0


def _envelope_check(ctx: SuiteContext, name: str, space: MarkedSpace) -> list[CheckResult]:
    profile = ctx.contraction(name, space)
    fit = ctx.classify(profile)
    rho = profile.finite()
    coarse = fit.coarse if fit is not None else CoarseClass.INCONCLUSIVE
    image = geodesic_image_profile(
        space, ProjectionParams(), SEGMENT_C, ctx.cfg.sampling_plan(), jobs=ctx.jobs
    )
    ctx.save(f"{name}.geodesic-image-C{SEGMENT_C:g}", image)
    records = image.records
    out = [
        check(
            "CONTRACTION_FIT_SUBLINEAR",
            name,
            coarse in SUBLINEAR_OR_BOUNDED,
            f"fitted contraction function is {fit_label(fit)}",
            severity=fit_severity(fit),
            details={"fit": fit_dict(fit)},
        )
    ]
    if image.is_empty:
        out.append(
            check(
                "GEODESIC_IMAGE_ENVELOPE",
                name,
                False,
                f"no segment stays at distance >= {SEGMENT_C:g} from Y",
                severity=Severity.WARN,
                details=dict(image.diagnostics),
            )
        )
    elif rho is not None:
        result = check_geodesic_image(records, rho, ctx.cfg.box())
        worst = max(records, key=lambda rec: (rec.diam_proj, -rec.a, -rec.b), default=None)
        out.append(
            check(
                "GEODESIC_IMAGE_ENVELOPE",
                name,
                result.ok,
                f"{result.segments} segments at distance >= {SEGMENT_C:g}: endpoint and "
                f"interior envelopes {'hold' if result.ok else 'fail'} "
                "against the contraction profile",
                witness=worst.to_dict() if worst is not None else None,
                details={**result.to_dict(), "sample": dict(image.diagnostics)},
            )
        )
    if space.family is Family.TREE:
        nonzero = [rec for rec in records if rec.diam_proj > 0]
        out.append(
            check(
                "TREE_IMAGE_POINT",
                name,
                not nonzero,
                f"{len(nonzero)} of {len(records)} segments project to more than a point",
                witness=nonzero[0].to_dict() if nonzero else None,
            )
        )
    if coarse is CoarseClass.BOUNDED and rho is not None:
        out.append(_far_segments_bounded(ctx, name, space, max(rho.values)))
    return out


def _far_segments_bounded(
    ctx: SuiteContext, name: str, space: MarkedSpace, bound: float
) -> CheckResult:
    """With bounded contraction, segments beyond twice the bound project boundedly."""
    res = space.graph.resolution
    params = ProjectionParams()
    R2 = 2 * bound + res
    limit = bound + 2 * params.epsilon + res
    records = geodesic_image_profile(space, params, R2, ctx.cfg.sampling_plan(), jobs=ctx.jobs)
    bad = [rec for rec in records if rec.diam_proj > limit]
    return check(
        "FAR_SEGMENTS_BOUNDED",
        name,
        not bad,
        f"{len(records)} segments at distance >= {R2:g}, "
        f"{len(bad)} with projection diameter > {limit:g}",
        witness=bad[0].to_dict() if bad else None,
        details={"R2": R2, "limit": limit, "segments": len(records)},
    )


def run_git(ctx: SuiteContext, spaces: dict[str, MarkedSpace]) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for name, space in spaces.items():
        log.info("git space", space=name, family=space.family.value)
        checks.extend(_envelope_check(ctx, name, space))
    return checks
