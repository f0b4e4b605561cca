"""Greedy-drawability recognition for trees and pseudo-trees."""

from .decision import (
    AngleVector,
    Decision,
    NonPositiveAngleError,
    RecognitionError,
    Rule,
)
from .angle_vector import (
    DEGREE_FIVE_ROWS,
    RangeCell,
    match_degree_five_row,
    recognize_angle_vector,
)
from .trees import angle_vector_at, recognize_tree
from .pseudo_trees import cycle_angles, recognize_pseudo_tree
from .enumerate import (
    accepted_bucket_tuples,
    compress_rows,
    enumerate_feasible_combinations,
    row_labels,
)

__all__ = [
    "AngleVector",
    "Decision",
    "NonPositiveAngleError",
    "RecognitionError",
    "Rule",
    "DEGREE_FIVE_ROWS",
    "RangeCell",
    "match_degree_five_row",
    "recognize_angle_vector",
    "angle_vector_at",
    "recognize_tree",
    "cycle_angles",
    "recognize_pseudo_tree",
    "accepted_bucket_tuples",
    "compress_rows",
    "enumerate_feasible_combinations",
    "row_labels",
]
