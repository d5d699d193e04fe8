from __future__ import annotations

from pathlib import Path
from typing import Any

import structlog

from ..core import RunProvenance, get_logger, utc_now_iso
from .context import RunContext
from .events import EventSink, EventType
from .report import RunReport
from .stage import Command, run_command


class PipelineRunner:
    """Runs one command and keeps its bookkeeping under `<run_root>/<run_id>/`."""

    def __init__(
        self, command: Command, *, logger: structlog.stdlib.BoundLogger | None = None
    ) -> None:
        self.command = command
        self.logger = logger or get_logger("geodesic_lab.pipeline")

    def run(
        self, *, out_dir: Path, run_root: Path, run_id: str, meta: dict[str, Any] | None = None
    ) -> tuple[RunReport, Path]:
        """Returns the report and its path; `report.exit_code` is the CLI exit code."""
        meta = meta or {}
        root = Path(run_root) / run_id
        root.mkdir(parents=True, exist_ok=True)
        events_path = root / "events.jsonl"
        provenance = RunProvenance(
            run_id=run_id, started_at_utc=utc_now_iso(), command=self.command.name
        )
        ctx = RunContext(
            run_id=run_id,
            command=self.command.name,
            run_root=root,
            out_dir=Path(out_dir),
            logger=self.logger.bind(command=self.command.name),
            events=EventSink(events_path),
            meta=meta,
        )

        ctx.emit(EventType.RUN_START, out_dir=str(ctx.out_dir), **meta)
        result = run_command(ctx, self.command)
        if result.error is not None:
            ctx.emit(EventType.COMMAND_FAILED, code=result.error.code, message=result.error.message)

        report = RunReport(
            provenance=provenance,
            finished_at_utc=utc_now_iso(),
            result=result,
            events_jsonl=str(events_path),
            meta=meta,
        )
        report_path = root / "run_report.json"
        report.write_json(report_path)
        ctx.emit(EventType.RUN_FINISH, exit_code=report.exit_code, duration_ms=result.duration_ms)
        return report, report_path
