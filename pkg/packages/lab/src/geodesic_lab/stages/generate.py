from __future__ import annotations

from ..io import emit_space
from ..pipeline import ArtifactKind, EventType, RunContext, StageOutput
from ..spaces import generate
from .common import arg, output_path, required_arg


def stage_generate(ctx: RunContext) -> StageOutput:
    family = str(required_arg(ctx, "family"))
    params = dict(arg(ctx, "params") or {})
    space = generate(family, params)
    out = output_path(ctx, arg(ctx, "out"), f"{family}.json")
    doc = emit_space(space, out)

    metrics = {
        "vertices": doc.vertex_count,
        "edges": len(doc.edges),
        "y_size": len(space.Y),
        "valid_radius": space.valid_radius,
    }
    ctx.emit(EventType.GENERATE_FINISH, family=family, path=str(out), **metrics)
    return StageOutput(
        outputs={"document": str(out)},
        metrics=metrics,
        artifacts=[ctx.record(ArtifactKind.SPACE, out)],
    )
