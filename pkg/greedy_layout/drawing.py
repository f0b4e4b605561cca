"""Drawings, cone overlays and layout outcomes.

    A Drawing maps every vertex of a graph to a point. Layout drawings carry
    mpmath coordinates (exact dyadic values, verified in exact mode) plus the
    construction trace; drawings read back from JSON carry Fractions or floats.

    To test this module run: uv run -m greedy_layout.drawing
"""

import json
import logging
import math
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import mpmath

from greedy_graph import Graph, GraphError, VertexNotFoundError, build_graph
from greedy_verify import VerificationReport, check_greedy_pairwise, diameter
from recognition import Decision
from settings import CONFIG

logger = logging.getLogger(__name__)


class LayoutError(Exception):
    """Base class for layout errors."""


class OpeningTooLargeError(LayoutError, ValueError):
    """A requested opening is not below the supremum of the subtree's type."""


class ConstructionError(LayoutError):
    """A construction kept failing verification after its retry budget."""


class ThinDrawingError(LayoutError):
    """A construction is greedy but some pair improves by no more than the required margin."""


class CoordinateFormatError(LayoutError, ValueError):
    """A coordinate document is missing vertices or holds unreadable numbers."""


@dataclass(frozen=True)
class NotDrawable:
    """The recognizer rejected the graph; decision says why."""
    decision: Decision

    @property
    def drawable(self) -> bool:
        return False


@dataclass(frozen=True)
class ConeOverlay:
    """Opening cone of a fragment: apex vertex, bisector direction and opening, degrees."""
    vertex: str
    bisector: float
    opening: float


@dataclass(frozen=True)
class Drawing:
    """A straight-line drawing.

    Attributes:
        graph: The drawn graph
        coords: vertex -> (x, y)
        trace: Construction steps (strategy, scales, retries) as JSON-ready dicts
        shrunk: Vertices placed by the shrinking fragment construction
        cones: Fragment cones, for SVG overlays
        report: Verification report of the finished drawing, when checked
    """
    graph: Graph
    coords: Mapping[str, tuple[Any, Any]]
    trace: tuple[dict, ...] = ()
    shrunk: frozenset[str] = frozenset()
    cones: tuple[ConeOverlay, ...] = ()
    report: VerificationReport | None = None

    def __post_init__(self):
        missing = [v for v in self.graph.vertices if v not in self.coords]
        if missing:
            raise VertexNotFoundError(f"no coordinates for {missing[:5]}")

    @property
    def drawable(self) -> bool:
        return True

    def diameter(self) -> float:
        return diameter(self)

    def float_coords(self) -> dict[str, tuple[float, float]]:
        return {v: (float(self.coords[v][0]), float(self.coords[v][1])) for v in self.graph.vertices}

    def with_report(self, report: VerificationReport) -> "Drawing":
        return Drawing(self.graph, self.coords, self.trace, self.shrunk, self.cones, report)

    def to_dict(self, exact: bool = False) -> dict:
        """JSON-ready form: float coordinates, and decimal strings at working precision with exact=True."""
        payload: dict[str, Any] = {
            "kind": self.graph.kind.value,
            "vertices": list(self.graph.vertices),
            "edges": [list(e) for e in self.graph.edges],
            "coordinates": {v: list(xy) for v, xy in self.float_coords().items()},
            "trace": list(self.trace),
            "cones": [{"vertex": c.vertex, "bisector": c.bisector, "opening": c.opening} for c in self.cones],
        }
        if exact:
            payload["exact_coordinates"] = {v: [_exact_text(c) for c in self.coords[v]] for v in self.graph.vertices}
        if self.report is not None:
            diam = self.diameter()
            payload["verification"] = self.report.to_dict()
            relative = self.report.relative_margin(diam)
            payload["verification"]["relative_margin"] = None if math.isinf(relative) else relative
            payload["verification"]["diameter"] = diam
        return payload

    def to_json(self, exact: bool = False) -> str:
        return json.dumps(self.to_dict(exact), indent=2, sort_keys=True)


def _exact_text(x: Any) -> str:
    if isinstance(x, mpmath.mpf):
        # enough decimal digits to pin down every mantissa bit
        return mpmath.nstr(x, int(x._mpf_[3] * 0.30103) + 3)
    return str(x)


def _read_number(value: Any) -> Fraction | float | int:
    if isinstance(value, bool):
        raise CoordinateFormatError(f"'{value}' is not a coordinate")
    if isinstance(value, (int, float)):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise CoordinateFormatError(f"cannot read '{value}' as a number") from None
    raise CoordinateFormatError(f"cannot read {value!r} as a number")


def read_coordinates(graph: Graph, document: Mapping[str, Any]) -> Drawing:
    """Drawing of `graph` from a coordinate document.

    Accepts either a bare mapping vertex -> [x, y] or a drawing document with
    "coordinates" (and optionally "exact_coordinates", preferred). Numbers
    written as strings ('1/3', '0.25') become Fractions, JSON numbers stay
    ints or floats, so the verifier picks exact or float mode accordingly.

    Raises:
        CoordinateFormatError: Missing vertices or unreadable numbers
    """
    if "exact_coordinates" in document:
        raw = document["exact_coordinates"]
    elif "coordinates" in document:
        raw = document["coordinates"]
    else:
        raw = document
    coords: dict[str, tuple] = {}
    for v in graph.vertices:
        if v not in raw:
            raise CoordinateFormatError(f"vertex '{v}' has no coordinates")
        pair = raw[v]
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise CoordinateFormatError(f"vertex '{v}': expected [x, y], got {pair!r}")
        coords[v] = (_read_number(pair[0]), _read_number(pair[1]))
    return Drawing(graph, coords)


def drawing_from_json(text: str) -> Drawing:
    """Rebuild a drawing (graph and coordinates) from Drawing.to_json output."""
    try:
        document = json.loads(text)
        graph = build_graph([tuple(e) for e in document["edges"]], vertices=document.get("vertices"))
    except (json.JSONDecodeError, KeyError, TypeError, GraphError) as e:
        raise CoordinateFormatError(f"not a drawing document: {e}") from e
    return read_coordinates(graph, document)


def required_margin(placement) -> Fraction:
    """Greedy margin a constructed drawing has to beat: greedy_tolerance times its diameter."""
    return Fraction(CONFIG["greedy_tolerance"]) * Fraction(diameter(placement))


def verify_construction(drawing: Drawing) -> VerificationReport:
    """Exact pairwise check with required_margin as the absolute tolerance.

    The report passes only when every pair improves by more than the margin;
    a min_margin above zero with failures left means the drawing is greedy but too thin.
    """
    return check_greedy_pairwise(drawing, tol=required_margin(drawing), exact=True)


def is_thin(report: VerificationReport) -> bool:
    """Greedy, but some pair improves by no more than the required margin."""
    return not report.passed and report.min_margin > 0


def merge_coordinates(*parts: Mapping[str, tuple]) -> dict[str, tuple]:
    """Union of coordinate maps; a vertex placed twice must land on the same point."""
    merged: dict[str, tuple] = {}
    for part in parts:
        for v, xy in part.items():
            if v in merged and merged[v] != xy:
                raise LayoutError(f"vertex '{v}' placed twice at different points")
            merged[v] = xy
    return merged


if __name__ == "__main__":
    from greedy_graph import path_graph

    logging.basicConfig(level=logging.INFO, format="%(levelname)-8s %(message)s")
    dr = Drawing(path_graph(2), {"p0": (0, 0), "p1": (1, 0), "p2": (2, 0)}, trace=({"strategy": "demo"},))
    text = dr.to_json()
    logger.info(f"📝 {text}")
    back = drawing_from_json(text)
    logger.info(f"✅ read back {len(back.coords)} vertices")
