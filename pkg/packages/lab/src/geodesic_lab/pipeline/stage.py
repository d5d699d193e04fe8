from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from ..core import GeodesicLabError, StageError, Timer, stage_error_from_exc
from .context import RunContext
from .types import Artifact, ArtifactKind, StageOutput

StageFn = Callable[[RunContext], StageOutput]


@dataclass(frozen=True, slots=True)
class Command:
    """A CLI command as a stage: its function and the artifact kinds it must record."""

    name: str
    fn: StageFn
    produces: frozenset[ArtifactKind]


@dataclass(slots=True)
class StageResult:
    command: str
    ok: bool
    duration_ms: int
    outputs: dict[str, Any] = field(default_factory=dict)
    metrics: dict[str, Any] = field(default_factory=dict)
    artifacts: list[Artifact] = field(default_factory=list)
    error: StageError | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "status": "success" if self.ok else "failed",
            "duration_ms": self.duration_ms,
            "outputs": self.outputs,
            "metrics": self.metrics,
            "artifacts": [a.to_dict() for a in self.artifacts],
            "error": None if self.error is None else {
                "code": self.error.code,
                "exit_code": self.error.exit_code,
                "exc_type": self.error.exc_type,
                "message": self.error.message,
            },
        }


def run_command(ctx: RunContext, command: Command) -> StageResult:
    """Run one command; any exception becomes a failed result with a StageError."""
    log = ctx.logger
    out: StageOutput | None = None
    failure: Exception | None = None
    with Timer() as t:
        try:
            out = command.fn(ctx)
            missing = command.produces - out.kinds()
            if missing:
                raise RuntimeError(
                    f"{command.name} recorded no {sorted(k.value for k in missing)} artifact"
                )
        except Exception as e:
            failure = e
    duration = t.duration_ms or 0

    if failure is not None or out is None:
        err = stage_error_from_exc(failure or TypeError(f"{command.name} returned no output"))
        log.error("command failed", code=err.code, error=err.message, duration_ms=duration)
        # domain errors are expected outcomes; only surprises get a traceback
        if not isinstance(failure, GeodesicLabError):
            log.error("command exception", traceback=err.traceback)
        return StageResult(command=command.name, ok=False, duration_ms=duration, error=err)

    log.info(
        "command finished",
        duration_ms=duration,
        artifacts=[a.kind.value for a in out.artifacts],
        **out.metrics,
    )
    return StageResult(
        command=command.name,
        ok=True,
        duration_ms=duration,
        outputs=out.outputs,
        metrics=out.metrics,
        artifacts=out.artifacts,
    )
