from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

from ..core.errors import InvalidParamsError
from ..metric import ParamPath


@dataclass(frozen=True, slots=True)
class DetourWitness:
    """
    A path between two points of Y within budget L * d(y1, y2) that avoids
    the closed B-neighbourhood of Y except inside the closed B-balls around
    y1 and y2, with B < d(y1, y2)/2.
    """

    endpoints: tuple[int, int]
    L: float
    B: float
    path: ParamPath
    certified_qg: tuple[float, ParamPath] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "endpoints": list(self.endpoints),
            "L": self.L,
            "B": self.B,
            "path": self.path.to_dict(),
            "certified_qg": (
                {"L": self.certified_qg[0], "path": self.certified_qg[1].to_dict()}
                if self.certified_qg is not None
                else None
            ),
        }


@dataclass(frozen=True, slots=True)
class PairPlan:
    """
    Endpoint pairs on Y for detour sweeps: `separations` geometric
    separations along gamma, `anchors` seeded start points for each.
    """

    separations: int = 8
    anchors: int = 4
    seed: int = 0
    min_separation: float | None = None
    max_separation: float | None = None

    def __post_init__(self) -> None:
        if self.separations < 1 or self.anchors < 1:
            raise InvalidParamsError("pair plan needs >= 1 separation and anchor")

    def to_dict(self) -> dict[str, Any]:
        return {
            "separations": self.separations,
            "anchors": self.anchors,
            "seed": self.seed,
            "min_separation": self.min_separation,
            "max_separation": self.max_separation,
        }


@dataclass(frozen=True, slots=True)
class MorseBoundReport:
    E: float
    d_bound: float
    T: float
    B: float
    inputs: dict[str, Any] = field(default_factory=dict)
    # the tail condition is only ever certified on the sample grid
    scope: str = "on-window"

    def to_dict(self) -> dict[str, Any]:
        return {
            "E": self.E,
            "d_bound": self.d_bound,
            "T": self.T,
            "B": self.B,
            "inputs": dict(self.inputs),
            "scope": self.scope,
            "taming_constant": 0.0,
        }


class MorseVerdict(StrEnum):
    MORSE = "morse-on-window"
    NOT_MORSE = "not-morse"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, slots=True)
class ShortcutResult:
    path: ParamPath
    # input arc-length intervals that no longer appear in `path`
    replaced: tuple[tuple[float, float], ...]
    rounds: int

    @property
    def replaced_count(self) -> int:
        return len(self.replaced)

    def to_dict(self) -> dict[str, Any]:
        return {
            "path": self.path.to_dict(),
            "replaced": [list(iv) for iv in self.replaced],
            "rounds": self.rounds,
        }
