from __future__ import annotations

import itertools

import networkx as nx
import numpy as np
import pytest

from geodesic_lab.core.errors import InvalidGraphError, InvalidQueryError
from geodesic_lab.metric import (
    MetricGraph,
    PointSet,
    QGParams,
    avoid_shortest_path,
    distances_to_set,
    geodesic,
    hausdorff_distance,
    is_quasigeodesic,
    path_from_points,
    triangle_thinness,
)


def _cycle(n: int) -> MetricGraph:
    return MetricGraph(n, [(i, (i + 1) % n, 1.0) for i in range(n)])


def test_rejects_bad_graphs() -> None:
    with pytest.raises(InvalidGraphError):
        MetricGraph(3, [(0, 1, 1.0)])
    with pytest.raises(InvalidGraphError):
        MetricGraph(2, [(0, 1, 0.0)])
    with pytest.raises(InvalidGraphError):
        MetricGraph(2, [(0, 0, 1.0), (0, 1, 1.0)])
    with pytest.raises(InvalidGraphError):
        MetricGraph(2, [(0, 2, 1.0)])


def test_parallel_edges_keep_lightest() -> None:
    g = MetricGraph(2, [(0, 1, 3.0), (1, 0, 2.0)])
    assert g.edge_count == 1
    assert g.distance(0, 1) == 2.0


def test_distances_match_networkx() -> None:
    rng = np.random.default_rng(7)
    G = nx.connected_watts_strogatz_graph(40, 4, 0.3, seed=7)
    for a, b in G.edges():
        G[a][b]["weight"] = float(rng.integers(1, 5))
    g = MetricGraph(40, [(a, b, d["weight"]) for a, b, d in G.edges(data=True)])
    oracle = dict(nx.all_pairs_dijkstra_path_length(G))
    for x in range(40):
        row = g.distances_from(x)
        assert [row[y] for y in range(40)] == [oracle[x][y] for y in range(40)]


def test_geodesic_is_shortest_and_canonical() -> None:
    assert geodesic(_cycle(12), 0, 8).points == (0, 11, 10, 9, 8)
    assert geodesic(_cycle(8), 0, 4).points == (0, 1, 2, 3, 4)
    assert geodesic(_cycle(8), 3, 3).points == (3,)


def test_geodesic_matches_networkx_with_smallest_predecessor() -> None:
    G = nx.convert_node_labels_to_integers(nx.grid_2d_graph(5, 4), ordering="sorted")
    g = MetricGraph(G.number_of_nodes(), [(a, b, 1.0) for a, b in G.edges()])
    rng = np.random.default_rng(3)
    for x, y in rng.integers(0, G.number_of_nodes(), size=(30, 2)).tolist():
        p = geodesic(g, x, y)
        assert p.length == nx.shortest_path_length(G, x, y)
        # walking back from y, the smallest id is taken at every step
        want = min(nx.all_shortest_paths(G, x, y), key=lambda q: q[::-1])
        assert list(p.points) == want


def test_check_point_rejects_unknown_ids() -> None:
    g = _cycle(5)
    with pytest.raises(InvalidQueryError):
        g.distance(0, 7)


def test_avoid_shortest_path_detours_or_gives_up() -> None:
    g = _cycle(10)
    found = avoid_shortest_path(g, 0, 2, PointSet.of([1]))
    assert found is not None
    path, length = found
    assert length == 8.0 and 1 not in path.points
    assert avoid_shortest_path(g, 0, 2, PointSet.of([1]), limit=5.0) is None
    assert avoid_shortest_path(g, 0, 5, PointSet.of([2, 7])) is None
    with pytest.raises(InvalidQueryError):
        avoid_shortest_path(g, 0, 2, PointSet.of([0]))


def test_set_distances_and_hausdorff() -> None:
    g = MetricGraph(6, [(i, i + 1, 1.0) for i in range(5)])
    d = distances_to_set(g, PointSet.of([0, 5]))
    assert d.tolist() == [0.0, 1.0, 2.0, 2.0, 1.0, 0.0]
    assert hausdorff_distance(g, PointSet.of([0, 1]), PointSet.of([3])) == 3.0
    assert hausdorff_distance(g, PointSet.of([2]), PointSet.of([2])) == 0.0


def test_trees_have_thin_triangles_and_cycles_do_not() -> None:
    t = nx.balanced_tree(2, 3)
    g = MetricGraph(t.number_of_nodes(), [(a, b, 1.0) for a, b in t.edges()])
    assert triangle_thinness(g, 7, 10, 14) == 0.0
    assert triangle_thinness(_cycle(12), 0, 4, 8) == 2.0
    with pytest.raises(InvalidQueryError):
        triangle_thinness(g, 1, 1, 2)


def test_quasigeodesic_check() -> None:
    g = MetricGraph(5, [(i, i + 1, 1.0) for i in range(4)])
    straight = path_from_points(g, [0, 1, 2, 3, 4])
    assert is_quasigeodesic(g, straight, QGParams(1.0, 0.0))
    backtrack = path_from_points(g, [0, 1, 2, 1, 2, 3])
    assert not is_quasigeodesic(g, backtrack, QGParams(1.0, 0.0))
    assert is_quasigeodesic(g, backtrack, QGParams(1.0, 2.0))


def test_triangle_thinness_ignores_vertex_order() -> None:
    G = nx.convert_node_labels_to_integers(nx.grid_2d_graph(6, 5), ordering="sorted")
    g = MetricGraph(G.number_of_nodes(), [(a, b, 1.0) for a, b in G.edges()])
    rng = np.random.default_rng(5)
    for _ in range(10):
        x, y, z = (int(v) for v in rng.choice(G.number_of_nodes(), size=3, replace=False))
        want = triangle_thinness(g, x, y, z)
        for a, b, c in itertools.permutations((x, y, z)):
            assert triangle_thinness(g, a, b, c) == want


def test_hausdorff_is_zero_only_for_equal_sets() -> None:
    g = _cycle(12)
    rng = np.random.default_rng(9)
    for _ in range(20):
        Y = PointSet.of(rng.choice(12, size=int(rng.integers(1, 6)), replace=False).tolist())
        Z = PointSet.of(rng.choice(12, size=int(rng.integers(1, 6)), replace=False).tolist())
        assert hausdorff_distance(g, Y, Y) == 0.0
        assert (hausdorff_distance(g, Y, Z) == 0.0) == (set(Y) == set(Z))
