from __future__ import annotations

from pathlib import Path

from geodesic_lab.core import fs


def test_atomic_write_text_and_bytes_roundtrip(tmp_path: Path) -> None:
    text_path = tmp_path / "d1" / "profile.csv"
    fs.atomic_write_text(text_path, "r,value\n")
    assert text_path.read_text() == "r,value\n"

    fs.atomic_write_text(text_path, "updated")
    assert text_path.read_text() == "updated"

    bytes_path = tmp_path / "d2" / "plot.svg"
    fs.atomic_write_bytes(bytes_path, b"\x00\x01")
    assert bytes_path.read_bytes() == b"\x00\x01"

    # no temp files left behind
    assert sorted(p.name for p in (tmp_path / "d1").iterdir()) == ["profile.csv"]


def test_newlines_are_written_verbatim(tmp_path: Path) -> None:
    p = tmp_path / "out.txt"
    fs.atomic_write_text(p, "a\nb\n")
    assert p.read_bytes() == b"a\nb\n"


def test_safe_unlink_ignores_missing(tmp_path: Path) -> None:
    p = tmp_path / "gone.txt"
    fs.safe_unlink(p)
    p.write_text("x")
    fs.safe_unlink(p)
    assert not p.exists()
