from __future__ import annotations

import json
import threading
from dataclasses import asdict
from enum import StrEnum
from pathlib import Path

from ..core import ensure_parent, json_safe
from .types import Event


class EventType(StrEnum):
    RUN_START = "run.start"
    RUN_FINISH = "run.finish"
    COMMAND_FAILED = "command.failed"
    ARTIFACT_WRITTEN = "artifact.written"

    GENERATE_FINISH = "generate.finish"
    PROFILE_START = "profile.start"
    PROFILE_FINISH = "profile.finish"
    VERIFY_CHECK = "verify.check"
    VERIFY_FINISH = "verify.finish"
    PLOT_FINISH = "plot.finish"


class EventSink:
    """Append-only events.jsonl writer, safe to share between threads."""

    def __init__(self, path: Path) -> None:
        self.path = Path(path)
        ensure_parent(self.path)
        self._lock = threading.Lock()

    def emit(self, event: Event) -> None:
        line = json.dumps(json_safe(asdict(event)), ensure_ascii=False, sort_keys=True)
        with self._lock, self.path.open("a", encoding="utf-8") as f:
            f.write(line + "\n")
