from __future__ import annotations

import json
from pathlib import Path

from geodesic_lab.core import WindowViolationError
from geodesic_lab.pipeline import (
    ArtifactKind,
    Command,
    PipelineRunner,
    RunContext,
    StageOutput,
)


def _write_profile(ctx: RunContext) -> StageOutput:
    out = ctx.out_dir / "p.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("r,value\n1.0,0.0\n", encoding="utf-8")
    return StageOutput(outputs={"csv": str(out)}, artifacts=[ctx.record(ArtifactKind.PROFILE, out)])


def _events(path: Path) -> list[dict]:
    return [json.loads(ln) for ln in path.read_text(encoding="utf-8").splitlines()]


def test_run_report_carries_provenance_and_artifacts(tmp_path: Path) -> None:
    cmd = Command(name="profile", fn=_write_profile, produces=frozenset({ArtifactKind.PROFILE}))
    report, path = PipelineRunner(cmd).run(
        out_dir=tmp_path / "out", run_root=tmp_path / "_runs", run_id="r1"
    )
    assert report.exit_code == 0 and report.error is None

    doc = json.loads(path.read_text(encoding="utf-8"))
    assert doc["provenance"]["run_id"] == "r1"
    assert doc["provenance"]["command"] == "profile"
    (art,) = doc["result"]["artifacts"]
    assert art["kind"] == "profile" and art["content_type"] == "text/csv"
    assert art["bytes"] == (tmp_path / "out" / "p.csv").stat().st_size

    types = [e["type"] for e in _events(Path(report.events_jsonl))]
    assert types[0] == "run.start" and types[-1] == "run.finish"
    assert "artifact.written" in types


def test_command_missing_its_artifact_kind_fails(tmp_path: Path) -> None:
    cmd = Command(name="verify", fn=_write_profile, produces=frozenset({ArtifactKind.REPORT}))
    report, _ = PipelineRunner(cmd).run(
        out_dir=tmp_path / "out", run_root=tmp_path / "_runs", run_id="r2"
    )
    assert report.exit_code == 1
    assert report.error is not None and report.error.code == "internal"
    assert "report" in report.error.message


def test_domain_error_keeps_its_exit_code(tmp_path: Path) -> None:
    def _refuse(ctx: RunContext) -> StageOutput:
        raise WindowViolationError("r beyond window")

    cmd = Command(name="profile", fn=_refuse, produces=frozenset({ArtifactKind.PROFILE}))
    report, path = PipelineRunner(cmd).run(
        out_dir=tmp_path / "out", run_root=tmp_path / "_runs", run_id="r3"
    )
    assert report.exit_code == 3
    assert json.loads(path.read_text(encoding="utf-8"))["result"]["status"] == "failed"
    assert "command.failed" in [e["type"] for e in _events(Path(report.events_jsonl))]
