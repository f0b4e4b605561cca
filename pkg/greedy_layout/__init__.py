"""Verified greedy drawings: wheels, shrunken subtree fragments, trees, pseudo-trees and SVG output."""

from .drawing import (
    ConeOverlay,
    ConstructionError,
    CoordinateFormatError,
    Drawing,
    LayoutError,
    NotDrawable,
    OpeningTooLargeError,
    ThinDrawingError,
    drawing_from_json,
    is_thin,
    merge_coordinates,
    read_coordinates,
    required_margin,
    verify_construction,
)
from .wheel import NoSolution, WheelAngles, omega, place_wheel, solve_wheel_angles, wheel_slack
from .fragments import AttachedFragments, Fragment, Host, attach_fragments, deficit_rate, draw_subtree
from .trees import draw_tree, ranked_wheel_orders
from .pseudo_trees import STRATEGIES, draw_pseudo_tree
from .svg import SvgOptions, emit_svg

__all__ = [
    "ConeOverlay",
    "ConstructionError",
    "CoordinateFormatError",
    "Drawing",
    "LayoutError",
    "NotDrawable",
    "OpeningTooLargeError",
    "ThinDrawingError",
    "drawing_from_json",
    "is_thin",
    "merge_coordinates",
    "read_coordinates",
    "required_margin",
    "verify_construction",
    "NoSolution",
    "WheelAngles",
    "omega",
    "place_wheel",
    "solve_wheel_angles",
    "wheel_slack",
    "AttachedFragments",
    "Fragment",
    "Host",
    "attach_fragments",
    "deficit_rate",
    "draw_subtree",
    "draw_tree",
    "ranked_wheel_orders",
    "STRATEGIES",
    "draw_pseudo_tree",
    "SvgOptions",
    "emit_svg",
]
