from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np
import pytest

from geodesic_lab.asymptotics import GrowthClass
from geodesic_lab.core.errors import DocumentError
from geodesic_lab.divergence import DivergenceParams, DivergenceProfile, DivergenceSample
from geodesic_lab.io import (
    HEADERS,
    emit_space,
    load_space,
    parse_space_document,
    plot_profile_csv,
    read_profile_csv,
    sidecar_path,
    write_profile_csv,
)
from geodesic_lab.projection import Profile, ProfileKind, ProfileSample
from geodesic_lab.spaces import generate


def test_document_round_trip_is_byte_stable(tmp_path: Path) -> None:
    space = generate("necklace", {"rho2": "ceilsqrt", "i_min": 1, "i_max": 6})
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    emit_space(space, first)
    back = load_space(first)
    emit_space(back, second)

    assert first.read_bytes() == second.read_bytes()
    assert back.Y.members == space.Y.members
    assert back.landmarks == space.landmarks
    assert back.valid_radius == space.valid_radius
    assert back.graph.distance(0, back.graph.vertex_count - 1) == space.graph.distance(
        0, space.graph.vertex_count - 1
    )


def test_document_rejects_bad_input(tmp_path: Path) -> None:
    path = tmp_path / "t.json"
    emit_space(generate("tree", {"branching": 2, "depth": 3}), path)
    doc = json.loads(path.read_text(encoding="utf-8"))

    with pytest.raises(DocumentError):
        parse_space_document("{not json")

    extra = dict(doc, colour="blue")
    with pytest.raises(DocumentError):
        parse_space_document(json.dumps(extra))

    out_of_range = json.loads(json.dumps(doc))
    out_of_range["marks"]["Y"] = [0, doc["vertex_count"]]
    with pytest.raises(DocumentError):
        parse_space_document(json.dumps(out_of_range))

    with pytest.raises(DocumentError) as ei:
        load_space(tmp_path / "missing.json")
    assert ei.value.exit_code == 2


def _contraction() -> Profile:
    return Profile(
        kind=ProfileKind.CONTRACTION,
        samples=(
            ProfileSample(r=1.0, value=0.0, witness=None),
            ProfileSample(r=2.0, value=1.5, witness=(3, 7)),
            ProfileSample(r=4.0, value=1.0 / 3.0, witness=(5, 9)),
        ),
        params={"rho1": "id"},
        valid_radius=4.0,
    )


def test_profile_csv_header_numbers_and_sidecar(tmp_path: Path) -> None:
    path = tmp_path / "c.csv"
    kind = write_profile_csv(path, _contraction(), sidecar={"config": {"seed": 7}})
    assert kind is ProfileKind.CONTRACTION

    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == ",".join(HEADERS[ProfileKind.CONTRACTION])
    assert lines[1] == "1,0,,"
    assert lines[3] == "4,0.333333333,5,9"

    meta = json.loads(sidecar_path(path).read_text(encoding="utf-8"))
    assert meta["kind"] == "contraction"
    assert meta["config"] == {"seed": 7}

    table = read_profile_csv(path)
    assert table.kind is ProfileKind.CONTRACTION
    assert table.r.tolist() == [1.0, 2.0, 4.0]


def test_divergence_csv_writes_inf(tmp_path: Path) -> None:
    profile = DivergenceProfile(
        samples=(DivergenceSample(r=2.0, value=4.0, s=2.0), DivergenceSample(r=5.0, value=None)),
        params=DivergenceParams(),
        s_grid=(2.0, 5.0),
        valid_radius=5.0,
    )
    path = tmp_path / "d.csv"
    write_profile_csv(path, profile)
    assert path.read_text(encoding="utf-8").splitlines()[2].startswith("5,inf,")

    table = read_profile_csv(path)
    assert table.kind is ProfileKind.DIVERGENCE
    assert math.isinf(table.value[1])
    assert table.finite_mask.tolist() == [True, False]


def test_read_profile_csv_errors(tmp_path: Path) -> None:
    empty = tmp_path / "empty.csv"
    empty.write_text("", encoding="utf-8")
    with pytest.raises(DocumentError):
        read_profile_csv(empty)

    header_only = tmp_path / "header.csv"
    header_only.write_text("r,value,witness_x,witness_y\n", encoding="utf-8")
    with pytest.raises(DocumentError):
        read_profile_csv(header_only)

    unknown = tmp_path / "unknown.csv"
    unknown.write_text("a,b\n1,2\n", encoding="utf-8")
    with pytest.raises(DocumentError):
        read_profile_csv(unknown)

    garbage = tmp_path / "garbage.csv"
    garbage.write_text("r,value,witness_x,witness_y\n1,abc,,\n", encoding="utf-8")
    with pytest.raises(DocumentError):
        read_profile_csv(garbage)


def test_plot_writes_svg(tmp_path: Path) -> None:
    r = np.arange(1.0, 41.0)
    profile = Profile(
        kind=ProfileKind.CONTRACTION,
        samples=tuple(ProfileSample(r=float(x), value=float(x)) for x in r),
        params={},
        valid_radius=40.0,
    )
    csv = tmp_path / "lin.csv"
    write_profile_csv(csv, profile)
    svg = tmp_path / "lin.svg"

    fit = plot_profile_csv(csv, svg)
    assert svg.read_bytes().lstrip().startswith((b"<?xml", b"<svg"))
    assert fit is not None
    assert fit.growth_class is GrowthClass.LINEAR
