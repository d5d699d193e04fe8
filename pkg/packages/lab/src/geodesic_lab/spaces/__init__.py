from .abel import phi, phi_inverse, sigma_sequence, validate_abel_hypotheses
from .builder import GraphBuilder
from .generators import (
    cycle_arc,
    divergence_necklace,
    grid_id,
    grid_l1,
    halfplane,
    log_space,
    necklace,
    tree,
)
from .params import (
    CycleArcParams,
    DivergenceNecklaceParams,
    GridParams,
    HalfplaneParams,
    LogSpaceParams,
    NecklaceParams,
    SpaceParams,
    TreeParams,
    parse_space_params,
)
from .perturb import PerturbedSubspace, perturb_subspace
from .registry import GENERATOR_REGISTRY, generate
from .types import AbelData, Family, MarkedSpace, RoundingEntry, SpaceMeta

__all__ = [
    "AbelData",
    "cycle_arc",
    "CycleArcParams",
    "divergence_necklace",
    "DivergenceNecklaceParams",
    "Family",
    "generate",
    "GENERATOR_REGISTRY",
    "GraphBuilder",
    "grid_id",
    "grid_l1",
    "GridParams",
    "halfplane",
    "HalfplaneParams",
    "log_space",
    "LogSpaceParams",
    "MarkedSpace",
    "necklace",
    "NecklaceParams",
    "parse_space_params",
    "perturb_subspace",
    "PerturbedSubspace",
    "phi",
    "phi_inverse",
    "RoundingEntry",
    "sigma_sequence",
    "SpaceMeta",
    "SpaceParams",
    "tree",
    "TreeParams",
    "validate_abel_hypotheses",
]
