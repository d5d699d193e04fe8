from __future__ import annotations

from pathlib import Path

from ..io import plot_profile_csv
from ..pipeline import ArtifactKind, EventType, RunContext, StageOutput
from .common import required_arg


def stage_plot(ctx: RunContext) -> StageOutput:
    csv_path = Path(required_arg(ctx, "csv"))
    out = Path(required_arg(ctx, "out_svg"))
    fit = plot_profile_csv(csv_path, out)
    label = fit.label if fit is not None else None
    ctx.emit(EventType.PLOT_FINISH, csv=str(csv_path), svg=str(out), fit=label)
    return StageOutput(
        outputs={"svg": str(out), "fit": label},
        artifacts=[ctx.record(ArtifactKind.PLOT, out)],
    )
