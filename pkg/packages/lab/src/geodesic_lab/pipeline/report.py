from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ..core import RunProvenance, StageError, atomic_write_json
from .stage import StageResult


@dataclass(slots=True)
class RunReport:
    """run_report.json: who ran what, for how long, and what it left behind."""

    provenance: RunProvenance
    finished_at_utc: str
    result: StageResult
    events_jsonl: str
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def error(self) -> StageError | None:
        return self.result.error

    @property
    def exit_code(self) -> int:
        return 0 if self.error is None else self.error.exit_code

    def to_dict(self) -> dict[str, Any]:
        return {
            "provenance": self.provenance.to_dict(),
            "finished_at_utc": self.finished_at_utc,
            "exit_code": self.exit_code,
            "result": self.result.to_dict(),
            "events_jsonl": self.events_jsonl,
            "meta": self.meta,
        }

    def write_json(self, path: Path) -> None:
        atomic_write_json(Path(path), self.to_dict())
