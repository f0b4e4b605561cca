"""Opening-angle measurement of a drawn rooted subtree.

    polytope(T_i) is the intersection, over the subtree's edges other than the
    root edge (r, v), of the half-planes on the parent's side of each edge's
    perpendicular bisector. Its recession cone is the set of directions making
    at least 90 degrees with every parent -> child edge direction, so the
    angular sweep over the sorted edge directions is enough: the cone width is
    the largest cyclic gap minus 180. A gap below 180 means the polytope is
    bounded (Closed); no non-root edge at all leaves the whole plane, 180.

    To test this module run: uv run -m greedy_verify.opening
"""

import logging
from collections import deque
from dataclasses import dataclass

import mpmath

from greedy_graph import VertexNotFoundError

from .checks import Placement, exact_value, fraction_mpf
from .report import DegenerateEdgeError, TreeRequiredError

logger = logging.getLogger(__name__)

PRECISION_BITS = 192


@dataclass(frozen=True)
class OpenAngle:
    """A measured opening angle in degrees.

    caveat is set when the subtree was not drawn by the shrinking construction:
    the measured value then follows the half-plane definition only, which can
    differ from the infinitesimal one.
    """
    degrees: float
    caveat: bool = False

    @property
    def closed(self) -> bool:
        return False


@dataclass(frozen=True)
class Closed:
    """polytope(T_i) is bounded: the subtree has no open angle in this drawing."""
    caveat: bool = False

    @property
    def closed(self) -> bool:
        return True

    @property
    def degrees(self) -> None:
        return None


def subtree_edges(placement: Placement, root_edge: tuple[str, str]) -> list[tuple[str, str]]:
    """(parent, child) pairs of the subtree hanging below v, root edge excluded."""
    graph = placement.graph
    r, v = root_edge
    if r not in graph or v not in graph:
        raise VertexNotFoundError(f"root edge {root_edge} is not in the graph")
    if v not in graph.neighbors(r):
        raise VertexNotFoundError(f"({r}, {v}) is not an edge")
    if not graph.is_tree:
        raise TreeRequiredError(f"measure_opening_angle needs a tree, got {graph.kind.value}")

    edges = []
    parent = {v: r}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in graph.neighbors(x):
            if y != parent[x]:
                parent[y] = x
                edges.append((x, y))
                queue.append(y)
    return edges


def edge_directions(placement: Placement, edges: list[tuple[str, str]]) -> list[mpmath.mpf]:
    """Directions of parent -> child vectors in degrees, in [0, 360)."""
    directions = []
    with mpmath.workprec(PRECISION_BITS):
        for p, c in edges:
            (px, py), (cx, cy) = placement.coords[p], placement.coords[c]
            dx = exact_value(cx) - exact_value(px)
            dy = exact_value(cy) - exact_value(py)
            if dx == 0 and dy == 0:
                raise DegenerateEdgeError(f"edge ({p}, {c}) has coincident endpoints")
            angle = mpmath.degrees(mpmath.atan2(fraction_mpf(dy), fraction_mpf(dx)))
            directions.append(angle % 360)
    return directions


def largest_gap(directions: list[mpmath.mpf]) -> mpmath.mpf:
    """Largest cyclic gap between sorted directions (360 for a single one)."""
    ordered = sorted(directions)
    gaps = [b - a for a, b in zip(ordered, ordered[1:])]
    gaps.append(ordered[0] + 360 - ordered[-1])
    return max(gaps)


def measure_opening_angle(placement: Placement, root_edge: tuple[str, str]) -> OpenAngle | Closed:
    """Measure |angle T_i| of the subtree below v for the root edge (r, v).

    Args:
        placement: Tree drawing holding the subtree and its context
        root_edge: (r, v) with r outside the subtree

    Returns:
        OpenAngle with the recession-cone width, or Closed if polytope(T_i) is bounded

    Raises:
        DegenerateEdgeError: A subtree edge has coincident endpoints
        TreeRequiredError: The drawn graph is not a tree
    """
    edges = subtree_edges(placement, root_edge)
    caveat = root_edge[1] not in getattr(placement, "shrunk", frozenset())
    if not edges:
        return OpenAngle(180.0, caveat)
    with mpmath.workprec(PRECISION_BITS):
        width = largest_gap(edge_directions(placement, edges)) - 180
        if width < 0:
            logger.debug(f"Subtree below {root_edge[1]} is closed (largest gap {float(width) + 180:.6f})")
            return Closed(caveat)
        return OpenAngle(float(width), caveat)


if __name__ == "__main__":
    from dataclasses import dataclass as _dataclass

    from greedy_graph import Graph, build_graph

    logging.basicConfig(level=logging.INFO, format="%(levelname)-8s %(message)s")

    @_dataclass
    class _Coords:
        graph: Graph
        coords: dict

    folded = _Coords(
        build_graph([("r", "v"), ("v", "a"), ("a", "b"), ("b", "c")]),
        {"r": (-1, 0), "v": (0, 0), "a": (2, 0), "b": (1, 1), "c": (1, -1)},
    )
    star = _Coords(
        build_graph([("r", "v"), ("v", "a"), ("v", "b")]),
        {"r": (-1, 0), "v": (0, 0), "a": (1, 1), "b": (1, -1)},
    )
    logger.info(f"🔍 folded path: {measure_opening_angle(folded, ('r', 'v'))}")
    logger.info(f"🔍 two leaves 90 degrees apart: {measure_opening_angle(star, ('r', 'v'))}")
