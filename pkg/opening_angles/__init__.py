"""Opening-angle classification of rooted trees."""

from .angles import (
    ClassificationError,
    ExactAngle,
    InvalidAngleError,
    SignNote,
    format_degrees,
    parse_degrees,
)
from .tree_types import (
    InvalidTreeTypeError,
    TreeType,
    TreeVariant,
    combine_child_types,
    parse_tree_type,
    type_sort_key,
)
from .buckets import (
    CATCH_ALL_BUCKET,
    ANGLE_BUCKETS,
    AngleBucket,
    UnlistedAngleError,
    angle_bucket,
    range_label,
)
from .classify import (
    canonical_rooted_tree,
    classify_rooted,
    opening_angle_sup,
    rooted_angle,
)

__all__ = [
    "ClassificationError",
    "ExactAngle",
    "InvalidAngleError",
    "SignNote",
    "format_degrees",
    "parse_degrees",
    "InvalidTreeTypeError",
    "TreeType",
    "TreeVariant",
    "combine_child_types",
    "parse_tree_type",
    "type_sort_key",
    "CATCH_ALL_BUCKET",
    "ANGLE_BUCKETS",
    "AngleBucket",
    "UnlistedAngleError",
    "angle_bucket",
    "range_label",
    "canonical_rooted_tree",
    "classify_rooted",
    "opening_angle_sup",
    "rooted_angle",
]
