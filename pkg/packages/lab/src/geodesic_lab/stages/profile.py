from __future__ import annotations

from pathlib import Path
from typing import Any

from ..core.errors import UsageError
from ..divergence import (
    DivergenceParams,
    default_s_grid,
    divergence_profile,
    divergence_r_grid,
)
from ..io import RunConfig, load_space, write_profile_csv
from ..io.profile_csv import ProfileRecords
from ..morse import PairPlan, morse_profile
from ..pipeline import ArtifactKind, EventType, RunContext, StageOutput
from ..projection import (
    ProfileKind,
    ProjectionParams,
    contraction_profile,
    geodesic_image_profile,
    radius_grid,
)
from ..spaces import MarkedSpace
from .common import arg, output_path, required_arg, run_config

PROFILE_KINDS = (
    ProfileKind.CONTRACTION,
    ProfileKind.DIVERGENCE,
    ProfileKind.MORSE,
    ProfileKind.GEODESIC_IMAGE,
)


def _r_grid(ctx: RunContext, space: MarkedSpace) -> tuple[float, list[float]]:
    r_max = arg(ctx, "r_max")
    r_max = space.valid_radius if r_max is None else float(r_max)
    return r_max, radius_grid(r_max, space.graph.resolution, int(arg(ctx, "points", 40)))


def _compute(
    ctx: RunContext, kind: ProfileKind, space: MarkedSpace, cfg: RunConfig, jobs: int
) -> tuple[ProfileRecords, dict[str, Any]]:
    eps = float(arg(ctx, "epsilon", 0.0))
    if kind is ProfileKind.CONTRACTION:
        r_max, grid = _r_grid(ctx, space)
        rho1 = str(arg(ctx, "rho1", "id"))
        profile = contraction_profile(
            space,
            ProjectionParams(epsilon=eps),
            rho1,
            r_max,
            cfg.sampling_plan(),
            r_grid=grid,
            jobs=jobs,
        )
        return profile, {"radii": len(profile)}
    if kind is ProfileKind.DIVERGENCE:
        dp = DivergenceParams.parse(str(arg(ctx, "div_params", "1,0,0.5,2")))
        s_grid = default_s_grid(space, stride=int(arg(ctx, "stride", 1)))
        r_max = arg(ctx, "r_max")
        grid = divergence_r_grid(
            space,
            s_grid,
            r_max=None if r_max is None else float(r_max),
            count=int(arg(ctx, "points", 40)),
        )
        div = divergence_profile(space, dp, grid, s_grid, jobs=jobs)
        infinite = sum(1 for s in div.samples if s.value is None)
        return div, {"radii": len(div), "infinite": infinite}
    if kind is ProfileKind.MORSE:
        L_grid = [float(x) for x in str(arg(ctx, "L_grid", "1,2,4,8")).split(",")]
        plan = PairPlan(
            separations=int(arg(ctx, "separations", 8)),
            anchors=int(arg(ctx, "anchors", 4)),
            seed=cfg.seed,
        )
        profile = morse_profile(space, L_grid, plan, jobs=jobs)
        return profile, {"radii": len(profile)}
    C = float(arg(ctx, "C", 4.0))
    records = geodesic_image_profile(
        space, ProjectionParams(epsilon=eps), C, cfg.sampling_plan(), jobs=jobs
    )
    return records, {"segments": len(records), "empty": records.is_empty}


def stage_profile(ctx: RunContext) -> StageOutput:
    try:
        kind = ProfileKind(str(required_arg(ctx, "kind")))
    except ValueError:
        raise UsageError(
            f"unknown profile kind; expected one of {[k.value for k in PROFILE_KINDS]}"
        ) from None
    if kind not in PROFILE_KINDS:
        raise UsageError(f"profile kind {kind.value!r} is not available from the command line")

    space_path = Path(required_arg(ctx, "space"))
    space = load_space(space_path)
    cfg = run_config(ctx)
    jobs = int(ctx.meta.get("jobs", 1))

    ctx.emit(
        EventType.PROFILE_START,
        kind=kind.value,
        space=str(space_path),
        family=space.family.value,
        vertices=space.graph.vertex_count,
    )
    result, metrics = _compute(ctx, kind, space, cfg, jobs)
    out = output_path(ctx, arg(ctx, "out"), f"{space_path.stem}.{kind.value}.csv")
    write_profile_csv(
        out,
        result,
        sidecar={"config": cfg.to_dict(), "space": {"path": space_path.name, **space.meta.to_dict()}},
    )
    ctx.emit(EventType.PROFILE_FINISH, kind=kind.value, path=str(out), **metrics)
    return StageOutput(
        outputs={"csv": str(out), "kind": kind.value},
        metrics=metrics,
        artifacts=[ctx.record(ArtifactKind.PROFILE, out)],
    )
