"""Independent verification of greedy drawings and opening-angle measurement."""

from .report import (
    CoincidentVerticesError,
    DegenerateEdgeError,
    TreeRequiredError,
    VerificationError,
    VerificationReport,
    Violation,
)
from .checks import (
    Placement,
    check_greedy_halfplane,
    check_greedy_pairwise,
    diameter,
    exact_value,
    is_exact_coordinate,
)
from .opening import Closed, OpenAngle, edge_directions, largest_gap, measure_opening_angle, subtree_edges

__all__ = [
    "CoincidentVerticesError",
    "DegenerateEdgeError",
    "TreeRequiredError",
    "VerificationError",
    "VerificationReport",
    "Violation",
    "Placement",
    "check_greedy_halfplane",
    "check_greedy_pairwise",
    "diameter",
    "exact_value",
    "is_exact_coordinate",
    "Closed",
    "OpenAngle",
    "edge_directions",
    "largest_gap",
    "measure_opening_angle",
    "subtree_edges",
]
