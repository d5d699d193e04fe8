from __future__ import annotations

from typing import Annotated, Any, Literal, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    TypeAdapter,
    ValidationError,
    field_validator,
    model_validator,
)

from ..core.errors import InvalidFunctionError, InvalidParamsError, UsageError
from ..functions import FunctionSpec


class _FamilyParams(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    def to_params(self) -> dict[str, Any]:
        return self.model_dump(mode="json", exclude={"family"})


def _function_text(v: str) -> str:
    try:
        return FunctionSpec.parse(v).to_text()
    except InvalidFunctionError as e:
        raise ValueError(str(e)) from e


class CycleArcParams(_FamilyParams):
    family: Literal["cycle_arc"] = "cycle_arc"
    n: int = Field(..., ge=3, examples=[12])
    arc_len: int = Field(..., ge=0, examples=[4])

    @model_validator(mode="after")
    def _arc_fits(self) -> "CycleArcParams":
        if self.arc_len >= self.n:
            raise ValueError(f"arc_len must be < n, got {self.arc_len} >= {self.n}")
        return self


class TreeParams(_FamilyParams):
    family: Literal["tree"] = "tree"
    branching: int = Field(2, ge=1)
    depth: int = Field(..., ge=1, le=40)


class GridParams(_FamilyParams):
    family: Literal["grid_l1"] = "grid_l1"
    width: int = Field(..., ge=2)
    height: int = Field(..., ge=2)


class LogSpaceParams(_FamilyParams):
    family: Literal["log_space"] = "log_space"
    rho: str = Field("lin:0.5", examples=["lin:0.5", "affsqrt:2,-1", "minlog2"])
    A: float = Field(2.0, gt=0)
    n: int = Field(..., ge=1, le=64)
    resolution: float = Field(1.0, gt=0)

    @field_validator("rho")
    @classmethod
    def _rho_text(cls, v: str) -> str:
        return _function_text(v)


class NecklaceParams(_FamilyParams):
    family: Literal["necklace"] = "necklace"
    rho2: str = Field("ceilsqrt", examples=["ceilsqrt", "log:2,1"])
    i_min: int = Field(4, ge=2)
    i_max: int = Field(..., ge=2)
    resolution: float = Field(1.0, gt=0)

    @field_validator("rho2")
    @classmethod
    def _rho2_text(cls, v: str) -> str:
        return _function_text(v)

    @model_validator(mode="after")
    def _range(self) -> "NecklaceParams":
        if self.i_max < self.i_min:
            raise ValueError(f"i_max must be >= i_min, got {self.i_max} < {self.i_min}")
        return self


class DivergenceNecklaceParams(_FamilyParams):
    family: Literal["divergence_necklace"] = "divergence_necklace"
    f: str = Field("pow:2", examples=["pow:2", "lin:3"])
    i_min: int = Field(1, ge=1)
    i_max: int = Field(..., ge=1)
    resolution: float = Field(1.0, gt=0)

    @field_validator("f")
    @classmethod
    def _f_text(cls, v: str) -> str:
        return _function_text(v)

    @model_validator(mode="after")
    def _range(self) -> "DivergenceNecklaceParams":
        if self.i_max < self.i_min:
            raise ValueError(f"i_max must be >= i_min, got {self.i_max} < {self.i_min}")
        return self


class HalfplaneParams(_FamilyParams):
    family: Literal["halfplane"] = "halfplane"
    extent: float = Field(..., gt=0)
    resolution: float = Field(1.0, gt=0)

    @model_validator(mode="after")
    def _size(self) -> "HalfplaneParams":
        if round(self.extent / self.resolution) < 2:
            raise ValueError("extent must cover at least two resolution steps")
        return self


SpaceParams = Annotated[
    Union[
        CycleArcParams,
        TreeParams,
        GridParams,
        LogSpaceParams,
        NecklaceParams,
        DivergenceNecklaceParams,
        HalfplaneParams,
    ],
    Field(discriminator="family"),
]

_ADAPTER: TypeAdapter[Any] = TypeAdapter(SpaceParams)


def parse_space_params(data: dict[str, Any]) -> _FamilyParams:
    """Validate a {family, ...} mapping into its params model."""
    try:
        return _ADAPTER.validate_python(data)
    except ValidationError as e:
        missing = [err for err in e.errors() if err.get("type") == "missing"]
        if missing:
            names = ", ".join(".".join(str(p) for p in err["loc"]) for err in missing)
            raise UsageError(f"missing parameter(s): {names}", code="missing-param") from e
        raise InvalidParamsError(_first_error(e)) from e


def _first_error(e: ValidationError) -> str:
    errs = e.errors()
    if not errs:
        return str(e)
    err = errs[0]
    loc = ".".join(str(p) for p in err.get("loc", ()))
    return f"{loc}: {err.get('msg')}" if loc else str(err.get("msg"))
