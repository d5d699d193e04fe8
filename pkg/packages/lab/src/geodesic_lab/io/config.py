from __future__ import annotations

from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..asymptotics import BOUNDED_SPREAD, R2_THRESHOLD, ConstantBox, classify_growth
from ..asymptotics.sublinear import SUBLINEAR_RATIO
from ..asymptotics.types import FitReport, FunctionSamples
from ..core import DocumentError, read_json
from ..divergence.superlinear import SUPERLINEAR_HORIZON
from ..functions import BISECT_XTOL
from ..projection import SamplingMode, SamplingPlan


class SamplingModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    mode: SamplingMode = SamplingMode.AUTO
    max_exhaustive_vertices: int = Field(5000, ge=1)
    bands: int = Field(48, ge=1)
    per_band: int = Field(16, ge=1)
    include_landmarks: bool = True


class ConstantBoxModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    C1: tuple[float, ...] = ConstantBox().C1
    C2: tuple[float, ...] = ConstantBox().C2
    C3: tuple[float, ...] = ConstantBox().C3
    C4: tuple[float, ...] = ConstantBox().C4

    @field_validator("C1", "C2", "C3", "C4")
    @classmethod
    def _sorted(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if not v:
            raise ValueError("constant lists must be non-empty")
        return tuple(sorted(set(float(x) for x in v)))


class Tolerances(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    r2_threshold: float = Field(R2_THRESHOLD, gt=0, le=1)
    bounded_spread: float = Field(BOUNDED_SPREAD, ge=0)
    sublinear_ratio: float = Field(SUBLINEAR_RATIO, gt=0, lt=1)
    bisect_xtol: float = Field(BISECT_XTOL, gt=0)
    float_atol: float = Field(1e-9, ge=0)
    superlinear_horizon: float = Field(SUPERLINEAR_HORIZON, gt=1)


class RunConfig(BaseModel):
    """
    Everything that decides an analyzer output besides the space itself.
    Serialized into every CSV side-car and suite report.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    seed: int = 0
    sampling: SamplingModel = Field(default_factory=SamplingModel)
    constant_box: ConstantBoxModel = Field(default_factory=ConstantBoxModel)
    tolerances: Tolerances = Field(default_factory=Tolerances)
    jobs: int = Field(1, ge=1)
    output_dir: Path | None = None

    def sampling_plan(self) -> SamplingPlan:
        s = self.sampling
        return SamplingPlan(
            mode=s.mode,
            max_exhaustive_vertices=s.max_exhaustive_vertices,
            bands=s.bands,
            per_band=s.per_band,
            seed=self.seed,
            include_landmarks=s.include_landmarks,
        )

    def box(self) -> ConstantBox:
        b = self.constant_box
        return ConstantBox(C1=b.C1, C2=b.C2, C3=b.C3, C4=b.C4)

    def classify(self, f: FunctionSamples) -> FitReport:
        t = self.tolerances
        return classify_growth(f, r2_threshold=t.r2_threshold, bounded_spread=t.bounded_spread)

    def to_dict(self) -> dict[str, Any]:
        # jobs and output_dir never change an output, so they stay out of reports
        return self.model_dump(mode="json", exclude={"jobs", "output_dir"})


def load_run_config(path: Path | None, **overrides: Any) -> RunConfig:
    """RunConfig from an optional JSON file, with non-None overrides on top."""
    data: dict[str, Any] = {}
    if path is not None:
        try:
            data = read_json(Path(path))
        except (OSError, ValueError) as e:
            raise DocumentError(f"cannot read run config {path}: {e}") from e
    data.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        raise DocumentError(f"run config failed validation:\n{e}") from e
