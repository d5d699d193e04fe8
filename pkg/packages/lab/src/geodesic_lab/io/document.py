from __future__ import annotations

from pathlib import Path
from typing import Annotated, Any

from geodesic_lab_contracts import (
    SpaceDocumentValidationError,
    schema_version_int,
    validate_space_document_dict,
    validate_space_document_json,
)
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..core import DocumentError, GeodesicLabError, atomic_write_text, stable_json_dumps
from ..metric import MetricGraph, PointSet, path_from_points
from ..spaces import Family, MarkedSpace, RoundingEntry, SpaceMeta

VertexId = Annotated[int, Field(ge=0)]


class RoundingModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    segment: str = Field(..., min_length=1)
    requested: float
    realized: float


class MetaModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    family: Family
    params: dict[str, Any] = Field(default_factory=dict)
    valid_radius: float = Field(..., ge=0)
    truncation_index: int = Field(default=0, ge=0)
    rounding_log: list[RoundingModel] = Field(default_factory=list)


class MarksModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    Y: list[VertexId] = Field(..., min_length=1)
    gamma: list[VertexId] | None = None


class SpaceDocument(BaseModel):
    """
    Text form of a MarkedSpace. Parsing checks the shipped JSON schema first,
    then the cross-field rules below.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    format_version: int
    resolution: float = Field(..., gt=0)
    vertex_count: int = Field(..., ge=1)
    edges: list[tuple[VertexId, VertexId, float]]
    marks: MarksModel
    landmarks: dict[str, VertexId] = Field(default_factory=dict)
    meta: MetaModel

    @model_validator(mode="after")
    def _ids_in_range(self) -> "SpaceDocument":
        if self.format_version != schema_version_int():
            raise ValueError(
                f"format_version {self.format_version} is not supported "
                f"(expected {schema_version_int()})"
            )
        n = self.vertex_count
        for u, v, _ in self.edges:
            if u >= n or v >= n:
                raise ValueError(f"edge ({u}, {v}) outside [0, {n})")
        for name, ids in (("Y", self.marks.Y), ("gamma", self.marks.gamma or [])):
            if any(i >= n for i in ids):
                raise ValueError(f"mark {name} has ids outside [0, {n})")
        for name, v in self.landmarks.items():
            if v >= n:
                raise ValueError(f"landmark {name}={v} outside [0, {n})")
        gamma = self.marks.gamma
        if gamma is not None and (sorted(set(gamma)) != sorted(set(self.marks.Y)) or len(set(gamma)) != len(gamma)):
            raise ValueError("gamma must traverse exactly the vertices of Y, once each")
        return self

    # conversions

    @classmethod
    def from_space(cls, space: MarkedSpace) -> "SpaceDocument":
        g = space.graph
        meta = space.meta
        return cls(
            format_version=schema_version_int(),
            resolution=g.resolution,
            vertex_count=g.vertex_count,
            edges=[(u, v, w) for u, v, w in g.edge_list()],
            marks=MarksModel(
                Y=[int(y) for y in space.Y],
                gamma=list(space.gamma.points) if space.gamma is not None else None,
            ),
            landmarks=dict(sorted(space.landmarks.items())),
            meta=MetaModel(
                family=meta.family,
                params=dict(meta.params),
                valid_radius=meta.valid_radius,
                truncation_index=meta.truncation_index,
                rounding_log=[RoundingModel(**e.to_dict()) for e in meta.rounding_log],
            ),
        )

    def to_space(self) -> MarkedSpace:
        try:
            g = MetricGraph(self.vertex_count, self.edges, resolution=self.resolution)
            gamma = path_from_points(g, self.marks.gamma) if self.marks.gamma else None
            meta = SpaceMeta(
                family=self.meta.family,
                params=dict(self.meta.params),
                valid_radius=self.meta.valid_radius,
                truncation_index=self.meta.truncation_index,
                rounding_log=tuple(
                    RoundingEntry(e.segment, e.requested, e.realized)
                    for e in self.meta.rounding_log
                ),
            )
            return MarkedSpace(
                graph=g,
                Y=PointSet.of(self.marks.Y),
                meta=meta,
                gamma=gamma,
                landmarks=dict(self.landmarks),
            )
        except GeodesicLabError as e:
            raise DocumentError(f"space document does not describe a valid space: {e}") from e

    def to_dict(self) -> dict[str, Any]:
        d = self.model_dump(mode="json")
        if d["marks"].get("gamma") is None:
            d["marks"].pop("gamma", None)
        d["edges"] = [list(e) for e in d["edges"]]
        return d

    def dumps(self) -> str:
        return stable_json_dumps(self.to_dict(), indent=None) + "\n"


def parse_space_document(raw: str | bytes) -> SpaceDocument:
    try:
        obj = validate_space_document_json(raw)
        return SpaceDocument.model_validate(obj)
    except SpaceDocumentValidationError as e:
        raise DocumentError(str(e)) from e
    except ValidationError as e:
        raise DocumentError(f"space document failed model checks:\n{e}") from e


def load_space(path: Path) -> MarkedSpace:
    p = Path(path)
    try:
        raw = p.read_bytes()
    except OSError as e:
        raise DocumentError(f"cannot read space document {p}: {e}") from e
    return parse_space_document(raw).to_space()


def emit_space(space: MarkedSpace, path: Path) -> SpaceDocument:
    """Write the document for `space`; identical spaces give identical bytes."""
    doc = SpaceDocument.from_space(space)
    try:
        validate_space_document_dict(doc.to_dict())
    except SpaceDocumentValidationError as e:
        raise DocumentError(str(e)) from e
    atomic_write_text(Path(path), doc.dumps())
    return doc
