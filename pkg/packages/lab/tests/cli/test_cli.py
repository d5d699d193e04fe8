from __future__ import annotations

import json
from pathlib import Path

import pytest

from geodesic_lab.cli import main
from geodesic_lab.io import read_profile_csv


def _error_line(err: str) -> dict:
    lines = [ln for ln in err.splitlines() if ln.startswith('{"error"')]
    assert lines, err
    return json.loads(lines[-1])


@pytest.fixture()
def workdir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    monkeypatch.chdir(tmp_path)
    return tmp_path


def _tree(workdir: Path) -> Path:
    doc = workdir / "tree.json"
    assert main(["generate", "--family", "tree", "--branching", "2", "--depth", "4", "--out", str(doc)]) == 0
    return doc


def test_generate_then_profile_tree(workdir: Path) -> None:
    doc = _tree(workdir)
    assert json.loads(doc.read_text(encoding="utf-8"))["meta"]["family"] == "tree"
    assert list((workdir / "_runs").iterdir())

    csv = workdir / "tree.contraction.csv"
    assert main(["profile", "contraction", str(doc), "--out", str(csv)]) == 0
    table = read_profile_csv(csv)
    assert table.r.tolist() == [1.0, 2.0]
    assert table.value.tolist() == [0.0, 0.0]


def test_generate_default_output_goes_to_out_dir(workdir: Path) -> None:
    assert main(["generate", "--family", "grid_l1", "--width", "5", "--height", "3", "--out-dir", "docs"]) == 0
    assert (workdir / "docs" / "grid_l1.json").is_file()


def test_missing_family_parameter_exits_2(workdir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["generate", "--family", "tree", "--branching", "2"]) == 2
    assert _error_line(capsys.readouterr().err)["error"] == "missing-param"


def test_radius_beyond_window_exits_3(workdir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    doc = _tree(workdir)
    capsys.readouterr()
    assert main(["profile", "contraction", str(doc), "--r-max", "100"]) == 3
    assert _error_line(capsys.readouterr().err)["error"] == "window-violation"


def test_plot_rejects_empty_csv(workdir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    empty = workdir / "empty.csv"
    empty.write_text("", encoding="utf-8")
    assert main(["plot", str(empty), str(workdir / "x.svg")]) == 2
    assert _error_line(capsys.readouterr().err)["error"] == "invalid-document"
    assert not (workdir / "x.svg").exists()


def test_bad_usage_exits_2(workdir: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["profile", "curvature", "x.json"]) == 2
    assert _error_line(capsys.readouterr().err)["error"] == "usage"
    assert main(["generate", "--family", "tree", "--depth", "2", "--jobs", "0"]) == 2
