from .graph import GEODESIC_ATOL, MetricGraph
from .paths import (
    avoid_shortest_path,
    filtered_csr,
    geodesic,
    is_quasigeodesic,
    path_distance_matrix,
    path_from_points,
    quasigeodesic_violations,
)
from .queries import (
    distance,
    distance_to_set,
    distances_to_set,
    hausdorff_distance,
    triangle_sides,
    triangle_thinness,
)
from .types import Length, ParamPath, PointId, PointSet, QGParams

__all__ = [
    "avoid_shortest_path",
    "distance",
    "distance_to_set",
    "distances_to_set",
    "filtered_csr",
    "geodesic",
    "GEODESIC_ATOL",
    "hausdorff_distance",
    "is_quasigeodesic",
    "Length",
    "MetricGraph",
    "ParamPath",
    "path_distance_matrix",
    "path_from_points",
    "PointId",
    "PointSet",
    "QGParams",
    "quasigeodesic_violations",
    "triangle_sides",
    "triangle_thinness",
]
