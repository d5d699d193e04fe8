from __future__ import annotations

import pytest

from geodesic_lab.core.errors import InvalidParamsError, UsageError
from geodesic_lab.functions import FunctionSpec
from geodesic_lab.metric import distance_to_set
from geodesic_lab.spaces import (
    Family,
    GraphBuilder,
    RoundingEntry,
    generate,
    perturb_subspace,
    phi_inverse,
    sigma_sequence,
)


def test_tree_ray_and_window() -> None:
    s = generate("tree", {"branching": 2, "depth": 3})
    assert s.family is Family.TREE
    assert s.graph.vertex_count == 15
    assert len(s.Y) == 4
    assert s.gamma is not None and s.gamma.length == 3.0
    assert s.valid_radius == 1.5


def test_grid_axis() -> None:
    s = generate("grid_l1", {"width": 9, "height": 5})
    assert s.graph.vertex_count == 45
    assert len(s.Y) == 9
    assert s.valid_radius == 2.0


def test_necklace_spot_values() -> None:
    s = generate("necklace", {"rho2": "ceilsqrt", "i_min": 4, "i_max": 12})
    x9 = s.landmark("x_9")
    assert distance_to_set(s.graph, x9, s.Y) == 18.0
    assert s.graph.distance(s.landmark("a_9"), s.landmark("b_9")) == 3.0


def test_divergence_necklace_bead_count() -> None:
    s = generate("divergence_necklace", {"f": "pow:2", "i_min": 1, "i_max": 50})
    beads = [name for name in s.landmarks if name.startswith("y_")]
    assert len(beads) == 50
    # J_i has length i^2, I_i has length 2i
    assert s.graph.distance(s.landmark("a_4"), s.landmark("b_4")) == 8.0


def test_log_space_sigma_tower() -> None:
    data = sigma_sequence(FunctionSpec.parse("lin:0.5"), 2.0, 4)
    assert data.sigma == (1.0, 2.0, 4.0, 8.0, 16.0)
    assert phi_inverse(FunctionSpec.parse("lin:0.5"), 2.0, 8.0) == 16.0

    s = generate("log_space", {"rho": "lin:0.5", "A": 2, "n": 4})
    assert s.meta.params["sigma"] == [1.0, 2.0, 4.0, 8.0, 16.0]
    assert s.valid_radius == 4.0
    assert distance_to_set(s.graph, s.landmark("z_4"), s.Y) == 16.0


def test_generate_is_deterministic() -> None:
    a = generate("necklace", {"i_min": 4, "i_max": 9})
    b = generate("necklace", {"i_min": 4, "i_max": 9})
    assert a.graph.edge_list() == b.graph.edge_list()
    assert a.landmarks == b.landmarks


def test_param_errors() -> None:
    with pytest.raises(UsageError) as ei:
        generate("necklace", {"rho2": "ceilsqrt"})
    assert ei.value.code == "missing-param"
    with pytest.raises(InvalidParamsError):
        generate("moebius", {})
    with pytest.raises(InvalidParamsError):
        generate("tree", {"depth": 3, "colour": "red"})
    with pytest.raises(InvalidParamsError):
        generate("cycle_arc", {"n": 6, "arc_len": 6})


def test_perturbed_subspace_stays_close() -> None:
    s = generate("necklace", {"i_min": 4, "i_max": 8})
    moved = perturb_subspace(s, 2.0, seed=3)
    assert moved.realized_hausdorff <= 2.0
    again = perturb_subspace(s, 2.0, seed=3)
    assert moved.space.Y == again.space.Y


def test_builder_logs_only_lengths_it_changed() -> None:
    b = GraphBuilder(resolution=1.0)
    start = b.add_vertex()
    assert len(b.add_path(start, 2.5, segment="bead")) == 4
    b.add_path(start, 3.0, segment="exact")
    assert b.rounding == [RoundingEntry(segment="bead", requested=2.5, realized=3.0)]
    assert b.build().vertex_count == 7
