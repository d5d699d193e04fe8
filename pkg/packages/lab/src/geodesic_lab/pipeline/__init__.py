from .context import RunContext
from .events import EventSink, EventType
from .report import RunReport
from .runner import PipelineRunner
from .stage import Command, StageFn, StageResult, run_command
from .types import Artifact, ArtifactKind, StageOutput

__all__ = [
    "Artifact",
    "ArtifactKind",
    "Command",
    "EventSink",
    "EventType",
    "PipelineRunner",
    "RunContext",
    "RunReport",
    "run_command",
    "StageFn",
    "StageOutput",
    "StageResult",
]
