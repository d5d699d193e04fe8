from __future__ import annotations

import math

import networkx as nx
import numpy as np
import pytest

from geodesic_lab.core.errors import InvalidParamsError, NotVerifiableError
from geodesic_lab.metric import QGParams, geodesic, is_quasigeodesic, path_from_points
from geodesic_lab.morse import (
    PairPlan,
    contraction_bound_from_morse,
    degradation,
    detour_bound,
    morse_bound_from_contraction,
    morse_profile,
    shortcut_quasigeodesify,
    shortcut_report,
)
from geodesic_lab.spaces import generate, grid_id


def test_morse_bound_from_contraction_values() -> None:
    report = morse_bound_from_contraction("id", "const:0", 0.0, 1.0, 0.0, [1, 2, 4, 8])
    assert (report.E, report.d_bound, report.T, report.B) == (1.0, 5.0, 5.0, 3.5)
    assert report.scope == "on-window"


def test_morse_bound_needs_the_tail_condition() -> None:
    with pytest.raises(NotVerifiableError):
        morse_bound_from_contraction("id", "id", 0.0, 1.0, 0.0, [1, 2, 4, 8])


@pytest.mark.parametrize(("r", "want"), [(0, 2.0), (1, 6.0), (10, 12.0), (100, 12.0)])
def test_contraction_bound_from_zero_morse(r: float, want: float) -> None:
    assert contraction_bound_from_morse("const:0", 1.0, r) == want


def test_contraction_bound_is_capped_by_ball_size() -> None:
    assert contraction_bound_from_morse("lin:1", 0.0, 1.0) == 4.0


def test_grid_detour_reaches_linear_height() -> None:
    s = generate("grid_l1", {"width": 15, "height": 8})
    y1, y2 = grid_id(2, 0, 8), grid_id(12, 0, 8)
    B, witness = detour_bound(s, y1, y2, 2.0)
    assert B == 4.0
    assert witness.path.length == 20.0
    assert witness.certified_qg is not None
    assert detour_bound(s, y1, y2, 1.0)[0] == 0.0


def test_tree_has_no_detours() -> None:
    s = generate("tree", {"branching": 2, "depth": 6})
    gamma = s.gamma
    assert gamma is not None
    assert detour_bound(s, gamma.points[0], gamma.points[-1], 4.0)[0] == 0.0


def test_morse_profile_grows_with_L_on_grid() -> None:
    s = generate("grid_l1", {"width": 21, "height": 11})
    p = morse_profile(s, [1.0, 2.0, 3.0], PairPlan(separations=4, anchors=2))
    values = p.values
    assert values[0] == 0.0
    assert values == sorted(values)
    assert values[-1] > 0.0


def test_shortcut_certifies_a_detour() -> None:
    s = generate("grid_l1", {"width": 6, "height": 5})
    g = s.graph
    corners = [(0, 0), (0, 3), (4, 3), (4, 0)]
    pts = [grid_id(*corners[0], 5)]
    for a, b in zip(corners, corners[1:]):
        leg = geodesic(g, grid_id(*a, 5), grid_id(*b, 5))
        pts.extend(leg.points[1:])
    path = path_from_points(g, pts)
    L = math.ceil(path.length / g.distance(path.start, path.end))

    out = shortcut_quasigeodesify(g, path, L)
    assert (out.start, out.end) == (path.start, path.end)
    assert out.length <= path.length
    assert is_quasigeodesic(g, out, QGParams(L), slack=g.resolution)
    assert degradation(g, path, out) <= path.length / (2 * L) + g.resolution

    straight = geodesic(g, path.start, path.end)
    assert shortcut_quasigeodesify(g, straight, 1.0).points == straight.points
    with pytest.raises(InvalidParamsError):
        shortcut_quasigeodesify(g, path, 2.0)


def test_shortcut_reports_the_replaced_stretch() -> None:
    s = generate("grid_l1", {"width": 6, "height": 5})
    g = s.graph
    walk = [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (3, 0), (2, 0), (1, 0), (1, 1)]
    path = path_from_points(g, [grid_id(i, j, 5) for i, j in walk])
    assert path.length == 8.0

    result = shortcut_report(g, path, 4.0)
    assert result.replaced == ((0.0, 8.0),)
    assert result.replaced_count <= 2
    assert result.rounds == 1
    assert result.path.length == 2.0
    assert (result.path.start, result.path.end) == (path.start, path.end)


def test_shortcut_leaves_a_quasigeodesic_alone() -> None:
    s = generate("grid_l1", {"width": 6, "height": 5})
    g = s.graph
    straight = geodesic(g, grid_id(0, 0, 5), grid_id(5, 4, 5))
    result = shortcut_report(g, straight, 1.0)
    assert result.replaced == ()
    assert result.rounds == 0


@pytest.mark.parametrize(
    ("family", "params"),
    [
        ("grid_l1", {"width": 9, "height": 7}),
        ("necklace", {"i_min": 4, "i_max": 9, "rho2": "ceilsqrt"}),
    ],
)
def test_shortcut_random_concatenations(family: str, params: dict[str, object]) -> None:
    s = generate(family, params)
    g = s.graph
    rng = np.random.default_rng(11)
    done = 0
    while done < 25:
        corners = [int(v) for v in rng.integers(0, g.vertex_count, size=4)]
        if corners[0] == corners[-1]:
            continue
        path = geodesic(g, corners[0], corners[1])
        for a, b in zip(corners[1:], corners[2:]):
            path = path.concat(geodesic(g, a, b))
        L = max(1.0, math.ceil(path.length / g.distance(path.start, path.end)))

        result = shortcut_report(g, path, L)
        out = result.path
        assert (out.start, out.end) == (path.start, path.end)
        assert out.length <= path.length + 1e-9
        assert is_quasigeodesic(g, out, QGParams(L), slack=g.resolution)
        assert degradation(g, path, out) <= path.length / (2 * L) + g.resolution
        assert result.replaced_count <= 2
        done += 1


def _detour_oracle(s, y1: int, y2: int, L: float) -> float:
    G = nx.Graph()
    G.add_weighted_edges_from(s.graph.edge_list())
    ys = [int(y) for y in s.Y.as_array()]
    dy = nx.multi_source_dijkstra_path_length(G, ys)
    d1 = nx.single_source_dijkstra_path_length(G, y1)
    d2 = nx.single_source_dijkstra_path_length(G, y2)
    d = d1[y2]
    best = 0.0
    for b in sorted({v for v in dy.values() if 0 < v < d / 2}):
        banned = {v for v, h in dy.items() if h <= b and d1[v] > b and d2[v] > b}
        H = G.subgraph(v for v in G if v not in banned)
        try:
            length = nx.dijkstra_path_length(H, y1, y2)
        except nx.NetworkXNoPath:
            continue
        if length <= L * d + 1e-9:
            best = b
    return float(best)


@pytest.mark.parametrize("L", [1.0, 1.5, 2.0, 3.0])
def test_detour_bound_matches_brute_force(L: float) -> None:
    s = generate("grid_l1", {"width": 13, "height": 6})
    for a, b in [(1, 5), (2, 10), (0, 12), (4, 7)]:
        y1, y2 = grid_id(a, 0, 6), grid_id(b, 0, 6)
        B, witness = detour_bound(s, y1, y2, L)
        assert B == _detour_oracle(s, y1, y2, L)
        assert witness.path.length <= L * s.graph.distance(y1, y2) + 1e-9
