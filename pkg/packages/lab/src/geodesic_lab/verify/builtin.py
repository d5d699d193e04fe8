from __future__ import annotations

from enum import StrEnum
from typing import Any, Final, Mapping

from ..core import InvalidParamsError
from ..spaces import MarkedSpace, generate


class Scale(StrEnum):
    QUICK = "quick"
    ACCEPTANCE = "acceptance"


# name -> (family, params); acceptance sizes are the desk-scale targets
BUILTIN_SPACES: Final[dict[Scale, dict[str, tuple[str, Mapping[str, Any]]]]] = {
    Scale.QUICK: {
        "tree": ("tree", {"branching": 2, "depth": 10}),
        "grid": ("grid_l1", {"width": 81, "height": 41}),
        "necklace": ("necklace", {"rho2": "ceilsqrt", "i_min": 4, "i_max": 40}),
        "log_space": ("log_space", {"rho": "lin:0.5", "A": 2.0, "n": 8}),
        "log_space_sqrt": ("log_space", {"rho": "affsqrt:2,-1", "A": 1.0, "n": 6}),
        "log_space_minlog2": ("log_space", {"rho": "minlog2", "A": 2.0, "n": 3}),
        "divergence_necklace": ("divergence_necklace", {"f": "pow:2", "i_min": 1, "i_max": 24}),
    },
    Scale.ACCEPTANCE: {
        "tree": ("tree", {"branching": 2, "depth": 14}),
        "grid": ("grid_l1", {"width": 400, "height": 200}),
        "necklace": ("necklace", {"rho2": "ceilsqrt", "i_min": 4, "i_max": 120}),
        "log_space": ("log_space", {"rho": "lin:0.5", "A": 2.0, "n": 16}),
        "log_space_sqrt": ("log_space", {"rho": "affsqrt:2,-1", "A": 1.0, "n": 12}),
        "log_space_minlog2": ("log_space", {"rho": "minlog2", "A": 2.0, "n": 3}),
        "divergence_necklace": ("divergence_necklace", {"f": "pow:2", "i_min": 1, "i_max": 60}),
    },
}


def builtin_space(name: str, scale: Scale | str = Scale.QUICK) -> MarkedSpace:
    table = BUILTIN_SPACES[Scale(scale)]
    if name not in table:
        raise InvalidParamsError(f"unknown builtin space {name!r}; known: {sorted(table)}")
    family, params = table[name]
    return generate(family, params)


def builtin_spaces(
    names: tuple[str, ...], scale: Scale | str = Scale.QUICK
) -> dict[str, MarkedSpace]:
    return {name: builtin_space(name, scale) for name in names}
