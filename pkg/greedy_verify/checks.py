"""Greedy-drawing checks: the pairwise definition and the half-plane criterion.

    A drawing is greedy when every vertex s has, for every target t != s, a
    neighbor strictly closer to t. On trees this is equivalent to: for every
    directed edge (u, v), all of u's side of the tree is strictly closer to u
    than to v.

    Exact mode compares squared distances of rational coordinates (ints,
    Fractions, and mpmath floats converted to their exact dyadic value); the
    tolerance is absolute there. Float mode vectorises the distance matrix
    with numpy and scales the tolerance by the drawing diameter.

    To test this module run: uv run -m greedy_verify.checks
"""

import logging
import math
from collections.abc import Mapping
from fractions import Fraction
from typing import Any, Protocol

import mpmath
import numpy as np
from mpmath.libmp import to_rational

from greedy_graph import Graph, build_graph, directed_component

from .report import (
    CoincidentVerticesError,
    TreeRequiredError,
    VerificationReport,
    Violation,
)

logger = logging.getLogger(__name__)


class Placement(Protocol):
    """Anything with a graph and a vertex -> (x, y) mapping (a layout Drawing, or
    coordinates read from a file)."""
    graph: Graph
    coords: Mapping[str, tuple[Any, Any]]


def exact_value(x: Any) -> Fraction:
    """Exact rational value of an int, Fraction, float or mpmath float."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, mpmath.mpf):
        p, q = to_rational(x._mpf_)
        return Fraction(p, q)
    if isinstance(x, (int, float)):
        return Fraction(x)
    return Fraction(str(x))


def fraction_mpf(x: Fraction) -> mpmath.mpf:
    """mpmath float of a Fraction at the working precision (mpf rejects Fractions directly)."""
    return mpmath.mpf(x.numerator) / x.denominator


def is_exact_coordinate(x: Any) -> bool:
    return isinstance(x, (int, Fraction, mpmath.mpf)) and not isinstance(x, bool)


def _exact_points(placement: Placement) -> dict[str, tuple[Fraction, Fraction]]:
    return {v: (exact_value(placement.coords[v][0]), exact_value(placement.coords[v][1]))
            for v in placement.graph.vertices}


def _float_points(placement: Placement) -> np.ndarray:
    return np.array(
        [[float(placement.coords[v][0]), float(placement.coords[v][1])] for v in placement.graph.vertices],
        dtype=float,
    )


def _use_exact(placement: Placement, exact: bool | None) -> bool:
    if exact is not None:
        return exact
    return all(is_exact_coordinate(c) for p in placement.coords.values() for c in p)


def _sq(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> Fraction:
    dx, dy = a[0] - b[0], a[1] - b[1]
    return dx * dx + dy * dy


def _exceeds(far: Fraction, near: Fraction, tol: Fraction) -> bool:
    """sqrt(far) - sqrt(near) > tol, decided exactly on squared distances."""
    if tol == 0:
        return far > near
    c = far - near - tol * tol
    return c > 0 and c * c > 4 * tol * tol * near


def _root_gap(far: Fraction, near: Fraction) -> float:
    """sqrt(far) - sqrt(near) as a float, evaluated with enough precision to keep
    tiny differences of large distances."""
    with mpmath.workprec(256):
        return float(mpmath.sqrt(fraction_mpf(far)) - mpmath.sqrt(fraction_mpf(near)))


def _check_distinct(placement: Placement, points: Mapping[str, tuple]) -> None:
    seen: dict[tuple, str] = {}
    for v in placement.graph.vertices:
        key = points[v]
        if key in seen:
            raise CoincidentVerticesError(f"vertices '{seen[key]}' and '{v}' share the point {key}")
        seen[key] = v


def diameter(placement: Placement) -> float:
    """Largest distance between two drawn vertices (0 for a single vertex)."""
    pts = _float_points(placement)
    if len(pts) < 2:
        return 0.0
    diff = pts[:, None, :] - pts[None, :, :]
    return float(np.sqrt((diff ** 2).sum(axis=-1)).max())


def check_greedy_pairwise(placement: Placement, tol: float | Fraction = 0, exact: bool | None = None) -> VerificationReport:
    """Check the greedy property on every ordered pair of distinct vertices.

    Args:
        placement: Drawing of any connected graph
        tol: Required improvement; absolute in exact mode, times the diameter
            in float mode
        exact: Force exact or float mode; by default exact when every
            coordinate is an int, Fraction or mpmath float

    Returns:
        VerificationReport listing every pair without a strictly closer neighbor

    Raises:
        CoincidentVerticesError: Two vertices share a point
    """
    graph = placement.graph
    if _use_exact(placement, exact):
        return _pairwise_exact(placement, Fraction(tol))

    pts = _float_points(placement)
    _check_distinct(placement, {v: tuple(pts[i]) for i, v in enumerate(graph.vertices)})
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt((diff ** 2).sum(axis=-1))
    n = len(graph.vertices)
    tol_eff = float(tol) * (float(dist.max()) if n > 1 else 0.0)

    failures: list[Violation] = []
    min_margin = math.inf
    for s, v in enumerate(graph.vertices):
        nbrs = [graph.index(u) for u in graph.neighbors(v)]
        if not nbrs:
            continue
        best = dist[nbrs].min(axis=0)
        margin = dist[s] - best
        margin[s] = np.inf
        if n > 1:
            min_margin = min(min_margin, float(margin.min()))
        for t in np.nonzero(margin <= tol_eff)[0]:
            failures.append(Violation(v, graph.vertices[t], float(margin[t])))
    return VerificationReport("pairwise", False, tol_eff, min_margin, tuple(failures))


def _pairwise_exact(placement: Placement, tol: Fraction) -> VerificationReport:
    graph = placement.graph
    pts = _exact_points(placement)
    _check_distinct(placement, pts)

    failures: list[Violation] = []
    min_margin = math.inf
    for s in graph.vertices:
        nbrs = graph.neighbors(s)
        for t in graph.vertices:
            if t == s:
                continue
            far = _sq(pts[s], pts[t])
            near = min(_sq(pts[u], pts[t]) for u in nbrs)
            margin = _root_gap(far, near)
            min_margin = min(min_margin, margin)
            if not _exceeds(far, near, tol):
                failures.append(Violation(s, t, margin))
    return VerificationReport("pairwise", True, float(tol), min_margin, tuple(failures))


def check_greedy_halfplane(placement: Placement, tol: float | Fraction = 0, exact: bool | None = None) -> VerificationReport:
    """Check the half-plane criterion on a tree drawing.

    For every directed edge (u, v) and every vertex w on u's side of the edge,
    d(w, u) + tol < d(w, v).

    Raises:
        TreeRequiredError: The graph is not a tree
        CoincidentVerticesError: Two vertices share a point
    """
    graph = placement.graph
    if not graph.is_tree:
        raise TreeRequiredError(f"check_greedy_halfplane needs a tree, got {graph.kind.value}")

    use_exact = _use_exact(placement, exact)
    if use_exact:
        pts = _exact_points(placement)
        tol_q = Fraction(tol)
        tol_eff = float(tol_q)
    else:
        arr = _float_points(placement)
        pts = {v: tuple(arr[i]) for i, v in enumerate(graph.vertices)}
        tol_eff = float(tol) * diameter(placement)
    _check_distinct(placement, pts)

    failures: list[Violation] = []
    min_margin = math.inf
    for a, b in graph.edges:
        for u, v in ((a, b), (b, a)):
            # u's side of the edge, u included
            for w in directed_component(graph, v, u):
                if use_exact:
                    far, near = _sq(pts[w], pts[v]), _sq(pts[w], pts[u])
                    margin = _root_gap(far, near)
                    ok = _exceeds(far, near, tol_q)
                else:
                    margin = math.dist(pts[w], pts[v]) - math.dist(pts[w], pts[u])
                    ok = margin > tol_eff
                min_margin = min(min_margin, margin)
                if not ok:
                    failures.append(Violation(w, v, margin, edge=(u, v)))
    return VerificationReport("halfplane", use_exact, tol_eff, min_margin, tuple(failures))


if __name__ == "__main__":
    from dataclasses import dataclass

    logging.basicConfig(level=logging.INFO, format="%(levelname)-8s %(message)s")

    @dataclass
    class _Coords:
        graph: Graph
        coords: dict

    path = build_graph([("u", "v"), ("v", "w")])
    straight = _Coords(path, {"u": (0, 0), "v": (1, 0), "w": (2, 0)})
    folded = _Coords(path, {"u": (0, 0), "v": (1, 0), "w": (Fraction(9, 10), Fraction(1, 20))})
    for name, dr in (("straight", straight), ("folded", folded)):
        logger.info(f"🔍 {name}")
        logger.info(check_greedy_pairwise(dr).summary())
        logger.info(check_greedy_halfplane(dr).summary())
