from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any


class ArtifactKind(StrEnum):
    """What a command leaves behind in the output directory."""

    SPACE = "space"
    PROFILE = "profile"
    REPORT = "report"
    PLOT = "plot"

    @property
    def content_type(self) -> str:
        return _CONTENT_TYPES[self]


_CONTENT_TYPES = {
    ArtifactKind.SPACE: "application/json",
    ArtifactKind.PROFILE: "text/csv",
    ArtifactKind.REPORT: "application/json",
    ArtifactKind.PLOT: "image/svg+xml",
}


@dataclass(frozen=True, slots=True)
class Artifact:
    kind: ArtifactKind
    path: str
    bytes: int
    sha256: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "content_type": self.kind.content_type,
            "path": self.path,
            "bytes": self.bytes,
            "sha256": self.sha256,
        }


@dataclass(slots=True)
class StageOutput:
    """
    What a command stage hands back: named outputs for the run report,
    metrics for the events log and the artifacts it recorded.
    """

    outputs: dict[str, Any] = field(default_factory=dict)
    metrics: dict[str, Any] = field(default_factory=dict)
    artifacts: list[Artifact] = field(default_factory=list)

    def kinds(self) -> frozenset[ArtifactKind]:
        return frozenset(a.kind for a in self.artifacts)


@dataclass(frozen=True, slots=True)
class Event:
    type: str
    ts_utc: str
    run_id: str
    command: str
    data: dict[str, Any] = field(default_factory=dict)
