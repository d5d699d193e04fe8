from __future__ import annotations

import math

import networkx as nx

from ..core.errors import InvalidParamsError
from ..core.logging import get_logger
from ..functions import FunctionSpec
from ..metric import MetricGraph, ParamPath, PointSet, path_from_points
from .abel import sigma_sequence
from .builder import GraphBuilder
from .params import (
    CycleArcParams,
    DivergenceNecklaceParams,
    GridParams,
    HalfplaneParams,
    LogSpaceParams,
    NecklaceParams,
    TreeParams,
)
from .types import Family, MarkedSpace, SpaceMeta

log = get_logger(__name__)


def _from_networkx(G: nx.Graph) -> tuple[MetricGraph, dict[object, int]]:
    """Relabel by sorted node key; unit weights unless an edge has `weight`."""
    nodes = sorted(G.nodes())
    ids = {node: k for k, node in enumerate(nodes)}
    edges = [(ids[a], ids[b], float(d.get("weight", 1.0))) for a, b, d in G.edges(data=True)]
    return MetricGraph(len(nodes), edges), ids


def _space(
    g: MetricGraph,
    Y: list[int],
    *,
    family: Family,
    params: dict,
    valid_radius: float,
    truncation_index: int,
    landmarks: dict[str, int],
    gamma: ParamPath | None = None,
    builder: GraphBuilder | None = None,
) -> MarkedSpace:
    meta = SpaceMeta(
        family=family,
        params=params,
        valid_radius=float(valid_radius),
        truncation_index=int(truncation_index),
        rounding_log=tuple(builder.rounding) if builder is not None else (),
    )
    s = MarkedSpace(
        graph=g,
        Y=PointSet.of(Y),
        meta=meta,
        gamma=gamma,
        landmarks=dict(sorted(landmarks.items())),
    )
    log.info(
        "space generated",
        family=family.value,
        vertices=g.vertex_count,
        edges=g.edge_count,
        y_size=len(s.Y),
        valid_radius=meta.valid_radius,
        roundings=len(meta.rounding_log),
    )
    return s


def cycle_arc(p: CycleArcParams) -> MarkedSpace:
    g, _ = _from_networkx(nx.cycle_graph(p.n))
    arc = list(range(p.arc_len + 1))
    return _space(
        g,
        arc,
        family=Family.CYCLE_ARC,
        params=p.to_params(),
        valid_radius=p.n / 4,
        truncation_index=0,
        landmarks={
            "arc_start": 0,
            "arc_end": p.arc_len,
            "antipode": (p.arc_len // 2 + p.n // 2) % p.n,
        },
        gamma=path_from_points(g, arc),
    )


def tree(p: TreeParams) -> MarkedSpace:
    """Balanced tree; Y is the leftmost root-to-leaf ray (child b*v + 1 at each level)."""
    G = nx.balanced_tree(p.branching, p.depth)
    g, ids = _from_networkx(G)
    ray = [0]
    while len(ray) <= p.depth:
        ray.append(ids[p.branching * ray[-1] + 1])
    landmarks = {"root": 0, "leaf": ray[-1]}
    # rightmost leaf
    landmarks["far_leaf"] = g.vertex_count - 1
    return _space(
        g,
        ray,
        family=Family.TREE,
        params=p.to_params(),
        # diameter 2*depth
        valid_radius=p.depth / 2,
        truncation_index=p.depth,
        landmarks=landmarks,
        gamma=path_from_points(g, ray),
    )


def grid_id(i: int, j: int, height: int) -> int:
    return i * height + j


def grid_l1(p: GridParams) -> MarkedSpace:
    """width x height L1 grid, vertex (i, j) has id i*height + j; Y is row j = 0."""
    g, _ = _from_networkx(nx.grid_2d_graph(p.width, p.height))
    axis = [grid_id(i, 0, p.height) for i in range(p.width)]
    mid = (p.width - 1) // 2
    return _space(
        g,
        axis,
        family=Family.GRID_L1,
        params=p.to_params(),
        valid_radius=min((p.width - 1) / 4, (p.height - 1) / 2),
        truncation_index=0,
        landmarks={
            "origin": 0,
            "axis_mid": grid_id(mid, 0, p.height),
            "corner": grid_id(p.width - 1, p.height - 1, p.height),
        },
        gamma=path_from_points(g, axis),
    )


def log_space(p: LogSpaceParams) -> MarkedSpace:
    rho = FunctionSpec.parse(p.rho)
    abel = sigma_sequence(rho, p.A, p.n)
    b = GraphBuilder(resolution=p.resolution)

    y0 = b.add_vertex()
    ray = b.add_path(y0, float(p.n), segment="Y")
    step = b.steps(1.0, segment="Y_unit")
    y_at = [ray[min(i * step, len(ray) - 1)] for i in range(p.n + 1)]

    landmarks: dict[str, int] = {}
    z: list[int] = []
    for i in range(p.n + 1):
        landmarks[f"y_{i}"] = y_at[i]
        length = abel.sigma[i]
        if round(length / p.resolution) == 0:
            if length:
                b.steps(length, segment=f"Z_{i}", minimum=0)
            z.append(y_at[i])
        else:
            z.append(b.add_path(y_at[i], length, segment=f"Z_{i}")[-1])
        landmarks[f"z_{i}"] = z[-1]

    for i in range(p.n):
        w_len = abel.sigma[i + 1] - abel.sigma[i] + 1.0
        w = b.add_path(z[i], w_len, segment=f"W_{i}", end=z[i + 1])
        # x_i sits half a unit from z_{i+1}, rounded to at least one step
        k = b.steps(0.5, segment=f"x_{i}")
        landmarks[f"x_{i}"] = w[max(len(w) - 1 - k, 0)]

    g = b.build()
    params = p.to_params() | {"sigma": list(abel.sigma)}
    return _space(
        g,
        ray,
        family=Family.LOG_SPACE,
        params=params,
        valid_radius=abel.sigma[-1] / 4,
        truncation_index=p.n,
        landmarks=landmarks,
        gamma=path_from_points(g, ray),
        builder=b,
    )


def _beaded_line(
    b: GraphBuilder,
    beads: list[tuple[int, float, float]],
) -> tuple[list[int], dict[str, int]]:
    """
    A line made of intervals I_i separated by one-step gaps, each I_i bridged
    by a path J_i between its endpoints.

    `beads` holds (i, |I_i|, |J_i|). Returns the line's vertices and landmarks
    a_i, b_i (endpoints), y_i (I_i center), x_i (J_i midpoint).
    """
    landmarks: dict[str, int] = {}
    start = b.add_vertex()
    line = b.add_path(start, b.resolution, segment="margin")
    for i, i_len, j_len in beads:
        a = line[-1]
        interval = b.add_path(a, i_len, segment=f"I_{i}")
        line.extend(interval[1:])
        bridge = b.add_path(a, j_len, segment=f"J_{i}", end=interval[-1])
        landmarks[f"a_{i}"] = a
        landmarks[f"b_{i}"] = interval[-1]
        landmarks[f"y_{i}"] = interval[(len(interval) - 1) // 2]
        landmarks[f"x_{i}"] = bridge[(len(bridge) - 1) // 2]
        gap = b.add_path(line[-1], b.resolution, segment="gap")
        line.extend(gap[1:])
    return line, landmarks


def necklace(p: NecklaceParams) -> MarkedSpace:
    rho2 = FunctionSpec.parse(p.rho2)
    beads: list[tuple[int, float, float]] = []
    for i in range(p.i_min, p.i_max + 1):
        ell = math.floor(rho2(i) / p.resolution + 0.5) * p.resolution
        if not 0 < ell < i:
            raise InvalidParamsError(
                f"necklace needs 0 < round(rho2(i)) < i, got round(rho2({i})) = {ell:g}"
            )
        beads.append((i, rho2(i), 4.0 * i))

    b = GraphBuilder(resolution=p.resolution)
    line, landmarks = _beaded_line(b, beads)
    g = b.build()
    extent = (len(line) - 1) * p.resolution
    return _space(
        g,
        line,
        family=Family.NECKLACE,
        params=p.to_params(),
        valid_radius=min(float(p.i_max), extent / 4),
        truncation_index=p.i_max,
        landmarks=landmarks,
        gamma=path_from_points(g, line),
        builder=b,
    )


def divergence_necklace(p: DivergenceNecklaceParams) -> MarkedSpace:
    f = FunctionSpec.parse(p.f)
    beads = [(i, 2.0 * i, f(i)) for i in range(p.i_min, p.i_max + 1)]
    b = GraphBuilder(resolution=p.resolution)
    line, landmarks = _beaded_line(b, beads)
    g = b.build()
    extent = (len(line) - 1) * p.resolution
    return _space(
        g,
        line,
        family=Family.DIVERGENCE_NECKLACE,
        params=p.to_params(),
        valid_radius=min(float(p.i_max), extent / 4),
        truncation_index=p.i_max,
        landmarks=landmarks,
        gamma=path_from_points(g, line),
        builder=b,
    )


def halfplane(p: HalfplaneParams) -> MarkedSpace:
    """
    Grid points (i*h, j*h), |i| <= N, 1 <= j <= N, with horizontal and vertical
    edges weighted by 1/j (the metric |dz|/y sampled at the lower endpoint).
    Y is the vertical line i = 0.
    """
    n = int(round(p.extent / p.resolution))
    G = nx.Graph()
    for i in range(-n, n + 1):
        for j in range(1, n + 1):
            if i < n:
                G.add_edge((i, j), (i + 1, j), weight=1.0 / j)
            if j < n:
                G.add_edge((i, j), (i, j + 1), weight=1.0 / j)
    nodes = sorted(G.nodes())
    ids = {node: k for k, node in enumerate(nodes)}
    edges = [(ids[a], ids[c], d["weight"]) for a, c, d in G.edges(data=True)]
    g = MetricGraph(len(nodes), edges, resolution=p.resolution)

    axis = [ids[(0, j)] for j in range(1, n + 1)]
    left, right = ids[(-n, 1)], ids[(n, 1)]
    extent = g.distance(left, right)
    return _space(
        g,
        axis,
        family=Family.HALFPLANE,
        params=p.to_params(),
        valid_radius=extent / 4,
        truncation_index=n,
        landmarks={
            "axis_bottom": axis[0],
            "axis_top": axis[-1],
            "left": left,
            "right": right,
        },
        gamma=path_from_points(g, axis),
    )
