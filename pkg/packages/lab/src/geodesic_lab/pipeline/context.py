from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import structlog

from ..core import sha256_file, utc_now_iso
from .events import EventSink, EventType
from .types import Artifact, ArtifactKind, Event


@dataclass(slots=True)
class RunContext:
    """
    One CLI command run.

    `out_dir` is where analyzer artifacts go; `run_root` holds only the run's
    own bookkeeping (events.jsonl, run_report.json).
    """

    run_id: str
    command: str
    run_root: Path
    out_dir: Path
    logger: structlog.stdlib.BoundLogger
    events: EventSink

    # parsed command arguments, RunConfig and worker count, set by the CLI
    meta: dict[str, Any] = field(default_factory=dict)

    def emit(self, event: EventType, **data: object) -> None:
        self.events.emit(
            Event(
                type=event.value,
                ts_utc=utc_now_iso(),
                run_id=self.run_id,
                command=self.command,
                data=dict(data),
            )
        )
        self.logger.debug(event.value, **data)

    def record(self, kind: ArtifactKind, path: Path) -> Artifact:
        """Digest a written file and log it as an artifact of this run."""
        p = Path(path)
        art = Artifact(
            kind=kind, path=str(p), bytes=p.stat().st_size, sha256=sha256_file(p).sha256
        )
        self.emit(EventType.ARTIFACT_WRITTEN, **art.to_dict())
        return art
