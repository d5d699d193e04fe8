from __future__ import annotations

import itertools

import networkx as nx
import numpy as np
import pytest

from geodesic_lab.asymptotics import MIN_SAMPLES, CoarseClass, GrowthClass, classify_growth
from geodesic_lab.core.errors import (
    InvalidComparisonError,
    InvalidFunctionError,
    WindowViolationError,
)
from geodesic_lab.functions import FunctionSpec
from geodesic_lab.metric import PointSet
from geodesic_lab.projection import (
    ContractionHypothesis,
    ProjectionParams,
    SamplingMode,
    SamplingPlan,
    check_contracting,
    contraction_profile,
    geodesic_image_profile,
    pair_projection_diameter,
    project,
    radius_grid,
    segment_record,
    subspace_projection_diameter,
)
from geodesic_lab.spaces import MarkedSpace, generate, perturb_subspace


def _oracle_profile(space: MarkedSpace, grid: list[float]) -> list[float]:
    """Exhaustive contraction values for rho1 = id from all-pairs distances."""
    G = nx.Graph()
    G.add_weighted_edges_from(space.graph.edge_list())
    d = dict(nx.all_pairs_dijkstra_path_length(G))
    Y = list(space.Y)
    dy = {v: min(d[v][y] for y in Y) for v in G.nodes}
    proj = {v: {y for y in Y if d[v][y] == dy[v]} for v in G.nodes}

    def diam(s: set[int]) -> float:
        return max(d[a][b] for a in s for b in s)

    out = []
    for r in grid:
        best = 0.0
        for x in G.nodes:
            if dy[x] > r:
                continue
            for y, dxy in d[x].items():
                if dxy <= dy[x]:
                    best = max(best, diam(proj[x] | proj[y]))
        out.append(best)
    return out


def test_tree_profile_is_identically_zero() -> None:
    s = generate("tree", {"branching": 2, "depth": 8})
    p = contraction_profile(s, ProjectionParams(), "id", s.valid_radius)
    assert p.values and all(v == 0.0 for v in p.values)
    hyp = ContractionHypothesis.parse("id", "const:0")
    assert check_contracting(p, hyp).ok


def test_grid_profile_equals_radius() -> None:
    s = generate("grid_l1", {"width": 41, "height": 21})
    grid = radius_grid(s.valid_radius, 1.0)
    p = contraction_profile(s, ProjectionParams(), "id", s.valid_radius, r_grid=grid)
    assert p.r == [float(r) for r in range(1, 11)]
    assert p.values == p.r

    result = check_contracting(p, ContractionHypothesis.parse("id", "sqrt"))
    assert not result.ok
    assert result.violations[0].r == 2.0


def test_necklace_profile_matches_exhaustive_oracle() -> None:
    s = generate("necklace", {"i_min": 4, "i_max": 10})
    grid = radius_grid(s.valid_radius, 1.0, count=12)
    p = contraction_profile(s, ProjectionParams(), "id", s.valid_radius, r_grid=grid)
    assert p.values == _oracle_profile(s, grid)


def test_profile_is_independent_of_worker_count() -> None:
    s = generate("necklace", {"i_min": 4, "i_max": 10})
    one = contraction_profile(s, None, "id", s.valid_radius, jobs=1)
    four = contraction_profile(s, None, "id", s.valid_radius, jobs=4)
    assert one.to_dict() == four.to_dict()


def test_necklace_projection_spot_values() -> None:
    s = generate("necklace", {"i_min": 4, "i_max": 12})
    x9 = s.landmark("x_9")
    assert project(s, x9) == PointSet.of([s.landmark("a_9"), s.landmark("b_9")])
    assert pair_projection_diameter(s, x9, x9) == 3.0
    assert subspace_projection_diameter(s, PointSet.of([x9])) == 3.0


def test_larger_epsilon_never_shrinks_projections() -> None:
    s = generate("necklace", {"i_min": 4, "i_max": 8})
    x = s.landmark("x_6")
    tight = project(s, x)
    loose = project(s, x, ProjectionParams(epsilon=1.0))
    assert set(tight).issubset(set(loose))


def test_window_and_hypothesis_errors() -> None:
    s = generate("tree", {"depth": 4})
    with pytest.raises(WindowViolationError):
        contraction_profile(s, None, "id", s.valid_radius + 1)
    p = contraction_profile(s, None, "id", s.valid_radius)
    with pytest.raises(InvalidComparisonError):
        check_contracting(p, ContractionHypothesis.parse("lin:0.5", "const:1"))


def test_tree_geodesic_images_are_points() -> None:
    s = generate("tree", {"branching": 2, "depth": 6})
    records = geodesic_image_profile(s, None, 1.0)
    assert records
    assert all(rec.diam_proj == 0.0 for rec in records)
    assert all(rec.min_dist >= 1.0 for rec in records)


def test_segment_record_matches_profile_entry() -> None:
    s = generate("tree", {"branching": 2, "depth": 6})
    rec = geodesic_image_profile(s, None, 1.0)[0]
    assert segment_record(s, rec.a, rec.b) == rec


@pytest.mark.parametrize("epsilon", [0.0, 1.0, 2.5])
def test_projection_diameter_is_bounded_by_distance_to_y(epsilon: float) -> None:
    s = generate("necklace", {"i_min": 4, "i_max": 10})
    g = s.graph
    params = ProjectionParams(epsilon=epsilon)
    dy = g.distances_to_set(sorted(s.Y))[0]
    rng = np.random.default_rng(4)
    for x in rng.choice(g.vertex_count, size=40, replace=False).tolist():
        members = list(project(s, x, params))
        diam = max(g.distance(a, b) for a, b in itertools.product(members, members))
        assert diam <= 2 * (dy[x] + epsilon) + 1e-9


@pytest.mark.parametrize("epsilon", [0.0, 1.0])
def test_contraction_values_stay_below_four_r(epsilon: float) -> None:
    s = generate("necklace", {"i_min": 4, "i_max": 12})
    p = contraction_profile(s, ProjectionParams(epsilon=epsilon), "id", s.valid_radius)
    for r, v in zip(p.r, p.values):
        assert v is not None and v <= 4 * r + 2 * epsilon + 1e-9


def test_stratified_profile_never_exceeds_exhaustive() -> None:
    s = generate("necklace", {"i_min": 4, "i_max": 16})
    full = contraction_profile(
        s, None, "id", s.valid_radius, SamplingPlan(mode=SamplingMode.EXHAUSTIVE)
    )
    thin = contraction_profile(
        s,
        None,
        "id",
        s.valid_radius,
        SamplingPlan(mode=SamplingMode.STRATIFIED, bands=4, per_band=2, include_landmarks=False),
    )
    assert thin.r == full.r
    assert thin.params["bases"] < full.params["bases"]
    assert all(a <= b for a, b in zip(thin.values, full.values))


def test_short_windows_are_filled_to_min_count() -> None:
    assert radius_grid(3.0, 1.0) == [1.0, 2.0, 3.0]
    grid = radius_grid(3.0, 1.0, min_count=2 * MIN_SAMPLES)
    assert len(grid) >= 2 * MIN_SAMPLES
    assert grid[0] == 1.0 and grid[-1] == 3.0
    assert grid == sorted(set(grid))


def test_tree_profile_classifies_as_bounded() -> None:
    s = generate("tree", {"branching": 2, "depth": 10})
    grid = radius_grid(s.valid_radius, s.graph.resolution, min_count=2 * MIN_SAMPLES)
    p = contraction_profile(s, None, "id", s.valid_radius, r_grid=grid)
    fit = classify_growth(p.finite())
    assert fit.growth_class is GrowthClass.BOUNDED
    assert fit.coarse is CoarseClass.BOUNDED


def test_hypothesis_domain_start() -> None:
    minlog2 = FunctionSpec.parse("minlog2")
    with pytest.raises(InvalidFunctionError):
        ContractionHypothesis(rho1=minlog2, rho2=FunctionSpec.constant(2.0))
    hyp = ContractionHypothesis(rho1=minlog2, rho2=FunctionSpec.constant(2.0), domain_start=2.0)
    assert hyp.domain_start == 2.0


def test_empty_geodesic_image_is_flagged() -> None:
    s = generate("tree", {"branching": 2, "depth": 4})
    image = geodesic_image_profile(s, None, 1000.0)
    assert image.is_empty and len(image) == 0
    assert image.diagnostics["empty"] is True
    assert image.diagnostics["reason"] == "no-vertices-at-distance-C"
    assert image.to_dict()["diagnostics"]["empty"] is True


def _coarse_class(space: MarkedSpace, epsilon: float = 0.0) -> CoarseClass:
    grid = radius_grid(space.valid_radius, space.graph.resolution, min_count=2 * MIN_SAMPLES)
    p = contraction_profile(
        space, ProjectionParams(epsilon=epsilon), "id", space.valid_radius, r_grid=grid
    )
    finite = p.finite()
    assert finite is not None
    return classify_growth(finite).coarse


def test_tree_class_is_stable_under_epsilon_and_perturbed_y() -> None:
    s = generate("tree", {"branching": 2, "depth": 12})
    base = _coarse_class(s)
    assert base is CoarseClass.BOUNDED
    for eps in (1.0, 2.0):
        assert _coarse_class(s, eps) is base
    moved = perturb_subspace(s, 1.0, seed=0)
    assert moved.realized_hausdorff <= 1.0
    assert _coarse_class(moved.space) is base
