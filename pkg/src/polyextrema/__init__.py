"""Extremal distance-sum and perimeter values of planar n-gons.

Closed forms live in :mod:`polyextrema.bounds`, extremal constructions in
:mod:`polyextrema.constructions`, and the numerical certification machinery
in :mod:`polyextrema.optimize`.
"""

from polyextrema.bounds import BoundSet, bound_set
from polyextrema.constructions import ConstructionSpec, Kind
from polyextrema.errors import PolyExtremaError, PolygonParseError
from polyextrema.geometry import (
    MetricSummary,
    Point,
    Polygon,
    is_convex_position,
    is_simple,
    metric_summary,
    normalize_to_unit_perimeter,
    perimeter,
    point_pair_square_bound,
    subpolygon_perimeter,
    sum_pairwise_distances,
    sum_pairwise_squared_distances,
)

__all__ = [
    "BoundSet", "ConstructionSpec", "Kind", "MetricSummary", "Point", "PolyExtremaError",
    "Polygon", "PolygonParseError", "bound_set", "is_convex_position", "is_simple",
    "metric_summary", "normalize_to_unit_perimeter", "perimeter", "point_pair_square_bound",
    "subpolygon_perimeter", "sum_pairwise_distances", "sum_pairwise_squared_distances",
]
