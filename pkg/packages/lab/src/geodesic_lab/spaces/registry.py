from typing import Any, Callable, Final, Mapping

from ..core.errors import InvalidParamsError
from .generators import (
    cycle_arc,
    divergence_necklace,
    grid_l1,
    halfplane,
    log_space,
    necklace,
    tree,
)
from .params import parse_space_params
from .types import Family, MarkedSpace

# Registry
GENERATOR_REGISTRY: Final[dict[Family, Callable[[Any], MarkedSpace]]] = {
    Family.CYCLE_ARC: cycle_arc,
    Family.TREE: tree,
    Family.GRID_L1: grid_l1,
    Family.LOG_SPACE: log_space,
    Family.NECKLACE: necklace,
    Family.DIVERGENCE_NECKLACE: divergence_necklace,
    Family.HALFPLANE: halfplane,
}


def generate(family: str | Family, params: Mapping[str, Any] | None = None) -> MarkedSpace:
    """Build a marked space from its family name and parameters."""
    try:
        fam = Family(family)
    except ValueError:
        raise InvalidParamsError(f"unknown family {family!r}") from None
    fn = GENERATOR_REGISTRY.get(fam)
    if fn is None:
        raise InvalidParamsError(f"No generator registered for family={fam.value!r}")
    model = parse_space_params({"family": fam.value, **dict(params or {})})
    return fn(model)
