"""Nearest-dominator queries over paired location/rating data.

For every point, find the geometrically closest point whose ratings are
strictly larger in every coordinate, plus the general query "nearest point
to p whose ratings lie in box R".
"""

from .delaunay import DelaunayTriangulation
from .dynamic import DynamicNNIndex
from .engine import (
    ALGORITHMS,
    Counters,
    nearest_dominator_offline,
    nearest_dominator_rangetree,
    nearest_dominator_sweep,
    nearest_dominators,
    sort_via_dominators,
)
from .errors import DomgeoError, ParseError, UsageError
from .geometry import Dataset, Neighbor, QueryRect, dominates, rect_contains, squared_distance
from .io import format_results, gen_dataset, parse_dataset
from .oracle import brute_nearest_dominator, brute_nn, brute_rect_query
from .predicates import in_circle, orientation
from .pst import PrioritySearchTree
from .rangetree import RangeTree, build_range_tree
from .staticnn import StaticNNIndex, build_static_nn

__all__ = [
    "ALGORITHMS",
    "Counters",
    "Dataset",
    "DelaunayTriangulation",
    "DomgeoError",
    "DynamicNNIndex",
    "Neighbor",
    "ParseError",
    "PrioritySearchTree",
    "QueryRect",
    "RangeTree",
    "StaticNNIndex",
    "UsageError",
    "brute_nearest_dominator",
    "brute_nn",
    "brute_rect_query",
    "build_range_tree",
    "build_static_nn",
    "dominates",
    "format_results",
    "gen_dataset",
    "in_circle",
    "nearest_dominator_offline",
    "nearest_dominator_rangetree",
    "nearest_dominator_sweep",
    "nearest_dominators",
    "orientation",
    "parse_dataset",
    "rect_contains",
    "sort_via_dominators",
    "squared_distance",
]
