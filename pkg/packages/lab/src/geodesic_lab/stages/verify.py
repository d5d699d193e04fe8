from __future__ import annotations

from pathlib import Path

from ..core import json_safe, stable_json_dumps
from ..core.errors import VerificationFailure
from ..io import load_space
from ..pipeline import ArtifactKind, EventType, RunContext, StageOutput
from ..spaces import MarkedSpace
from ..verify import Scale, builtin_space, run_verify_suite, suite_spec
from .common import arg, required_arg, run_config


def _spaces(ctx: RunContext, scale: Scale) -> dict[str, MarkedSpace] | None:
    """--space documents first, then --builtin names; None leaves the suite's own set."""
    spaces: dict[str, MarkedSpace] = {}
    for p in arg(ctx, "spaces") or []:
        spaces[Path(p).stem] = load_space(Path(p))
    for name in arg(ctx, "builtin") or []:
        spaces[name] = builtin_space(name, scale)
    return spaces or None


def stage_verify(ctx: RunContext) -> StageOutput:
    spec = suite_spec(str(required_arg(ctx, "suite")))
    scale = Scale(arg(ctx, "scale", Scale.QUICK.value))
    out_dir = Path(arg(ctx, "out") or ctx.out_dir / "verify")

    code, report_path, report = run_verify_suite(
        spec.name,
        out_dir=out_dir,
        cfg=run_config(ctx),
        spaces=_spaces(ctx, scale),
        scale=scale,
        jobs=int(ctx.meta.get("jobs", 1)),
        fail_on_warn=bool(arg(ctx, "fail_on_warn", False)),
    )
    for c in report.checks:
        ctx.emit(
            EventType.VERIFY_CHECK,
            code=c.code,
            space=c.space,
            severity=c.severity.value,
            status=c.status.value,
        )
    summary = report.summary.to_dict()
    ctx.emit(EventType.VERIFY_FINISH, suite=spec.name.value, exit_code=code, **summary)
    art = ctx.record(ArtifactKind.REPORT, report_path)

    if code != 0:
        bad = report.first_failure or next(c for c in report.checks if c.failed)
        witness = stable_json_dumps(json_safe(bad.witness), indent=None) if bad.witness else "none"
        raise VerificationFailure(
            f"{spec.name.value}: {bad.code} failed on {bad.space}: {bad.message} "
            f"(witness: {witness}; report: {report_path})"
        )
    return StageOutput(outputs={"report": str(report_path)}, metrics=summary, artifacts=[art])
