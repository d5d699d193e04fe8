from __future__ import annotations

import networkx as nx
import pytest

from geodesic_lab.core.errors import InvalidParamsError, WindowViolationError
from geodesic_lab.divergence import (
    DivergenceParams,
    RobustnessVerdict,
    SuperlinearVerdict,
    completely_superlinear_test,
    default_s_grid,
    divergence_profile,
    divergence_r_grid,
    forbidden_ball,
    lambda_divergence,
    parameter_robustness_check,
)
from geodesic_lab.spaces import MarkedSpace, generate
from geodesic_lab.verify import builtin_space

TIGHT = DivergenceParams(L=1.0, A=0.0, lam=1.0, kappa=1.0)


def _param_of(space: MarkedSpace, landmark: str) -> float:
    gamma = space.gamma
    assert gamma is not None
    return gamma.cumulative[gamma.points.index(space.landmark(landmark))]


def test_detour_around_bead_is_its_bridge() -> None:
    s = generate("divergence_necklace", {"f": "pow:2", "i_min": 1, "i_max": 8})
    t = _param_of(s, "y_4")
    assert lambda_divergence(s, 4.0, t, TIGHT) == 16.0
    # a smaller forbidden ball can only shorten the detour
    looser = DivergenceParams(L=1.0, A=0.0, lam=1.0, kappa=2.0)
    assert lambda_divergence(s, 4.0, t, looser) <= 16.0


def test_tree_divergence_is_infinite_once_the_ball_is_nonempty() -> None:
    s = generate("tree", {"branching": 2, "depth": 12})
    p = divergence_profile(s, DivergenceParams(), [5.0, 6.0])
    assert p.all_infinite
    assert completely_superlinear_test(p).verdict is SuperlinearVerdict.SUPERLINEAR


def test_grid_divergence_has_linear_witness() -> None:
    s = generate("grid_l1", {"width": 41, "height": 21})
    p = divergence_profile(s, DivergenceParams(), [float(r) for r in range(1, 11)])
    assert not any(x.is_infinite for x in p)
    report = completely_superlinear_test(p)
    assert report.verdict is SuperlinearVerdict.LINEAR_WITNESS
    assert report.witness_r


def test_profile_is_independent_of_worker_count() -> None:
    s = generate("divergence_necklace", {"f": "pow:2", "i_min": 1, "i_max": 10})
    grid = [1.0, 2.0, 4.0, 6.0, 8.0, 10.0]
    s_grid = default_s_grid(s, stride=2)
    one = divergence_profile(s, TIGHT, grid, s_grid, jobs=1)
    three = divergence_profile(s, TIGHT, grid, s_grid, jobs=3)
    assert one.to_dict() == three.to_dict()


def test_same_parameters_are_equivalent() -> None:
    s = generate("divergence_necklace", {"f": "pow:2", "i_min": 1, "i_max": 10})
    report = parameter_robustness_check(s, TIGHT, TIGHT, [2.0, 4.0, 6.0, 8.0, 10.0])
    assert report.verdict is RobustnessVerdict.EQUIVALENT
    assert report.first is report.second


def test_parameter_validation_and_window() -> None:
    assert DivergenceParams.parse("1,0,0.5,2") == DivergenceParams()
    with pytest.raises(InvalidParamsError):
        DivergenceParams(L=2.0, A=1.0, lam=0.5, kappa=2.0)
    with pytest.raises(InvalidParamsError):
        DivergenceParams.parse("1,0,0.5")
    s = generate("divergence_necklace", {"f": "pow:2", "i_min": 1, "i_max": 6})
    with pytest.raises(WindowViolationError):
        divergence_profile(s, None, [s.valid_radius + 1.0])


def test_profile_witness_avoids_the_ball_and_is_minimal() -> None:
    s = generate("divergence_necklace", {"f": "pow:2", "i_min": 1, "i_max": 8})
    gamma = s.gamma
    assert gamma is not None
    grid = [2.0, 4.0, 6.0, 8.0]
    s_grid = default_s_grid(s, stride=3)
    p = divergence_profile(s, TIGHT, grid, s_grid)
    pos = {c: k for k, c in enumerate(gamma.cumulative)}
    for sample in p:
        if sample.value is None:
            continue
        assert sample.path is not None and sample.s is not None
        centre = gamma.points[pos[sample.s]]
        ball = forbidden_ball(s, centre, TIGHT.forbidden_radius(sample.r))
        assert not any(ball[v] for v in sample.path.points)
        assert sample.path.start == gamma.points[pos[sample.s - sample.r]]
        assert sample.path.end == gamma.points[pos[sample.s + sample.r]]
        assert sample.path.length == sample.value
        for t in s_grid:
            if t - sample.r < 0 or t + sample.r > gamma.length:
                continue
            other = lambda_divergence(s, sample.r, t, TIGHT)
            if other is not None:
                assert sample.value <= other


def test_lambda_divergence_matches_brute_force() -> None:
    s = generate("divergence_necklace", {"f": "pow:2", "i_min": 1, "i_max": 6})
    gamma = s.gamma
    assert gamma is not None
    G = nx.Graph()
    G.add_weighted_edges_from(s.graph.edge_list())
    dp = DivergenceParams()
    for r in [3.0, 5.0, 8.0]:
        for k in range(0, len(gamma), 4):
            t = gamma.cumulative[k]
            if t - r < 0 or t + r > gamma.length:
                continue
            a = gamma.points[gamma.cumulative.index(t - r)]
            b = gamma.points[gamma.cumulative.index(t + r)]
            radius = dp.forbidden_radius(r)
            near = (
                nx.single_source_dijkstra_path_length(G, gamma.points[k], cutoff=radius)
                if radius > 0
                else {}
            )
            if a in near or b in near:
                want = None
            else:
                H = G.subgraph(v for v in G if v not in near)
                try:
                    want = float(nx.dijkstra_path_length(H, a, b))
                except nx.NetworkXNoPath:
                    want = None
            assert lambda_divergence(s, r, t, dp) == want


def test_default_radius_window_fits_a_short_gamma() -> None:
    s = builtin_space("log_space")
    gamma = s.gamma
    assert gamma is not None
    s_grid = default_s_grid(s)
    grid = divergence_r_grid(s, s_grid)
    assert grid and grid[-1] <= gamma.length / 2
    p = divergence_profile(s, None, grid, s_grid)
    assert p.r == grid
