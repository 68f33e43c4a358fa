"""Exact tools for integral and rational distance graphs in the plane."""

from .chart import (
    Chart,
    HyperbolaSpec,
    PointSet,
    QuadPoint,
    abt_general_position,
    arc_class,
    claim1_intercept,
    collinear,
    concyclic,
    dist2,
    hyperbola_membership,
    integer_distance,
    ptolemy_check,
    rational_distance,
    same_arc_secant_intercept,
)
from .extension import (
    count_bound,
    extension_candidates,
    extension_oracle,
    extension_points,
    grow_cliques,
    min_diameter_search,
)
from .numerics import integer_sqrt_floor, perfect_square_root, squarefree_part
from .triangles import IntegralTriangle, enumerate_integral_triangles, place_triangle

__version__ = "0.1.0"
