"""Tests for greedy_verify: pairwise and half-plane checks, opening angles."""

from dataclasses import dataclass
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greedy_graph import Graph, build_graph, cycle_graph, path_graph
from greedy_verify import (
    Closed,
    CoincidentVerticesError,
    DegenerateEdgeError,
    OpenAngle,
    TreeRequiredError,
    check_greedy_halfplane,
    check_greedy_pairwise,
    diameter,
    exact_value,
    is_exact_coordinate,
    measure_opening_angle,
)

from conftest import random_trees, rational_points


@dataclass
class Coords:
    graph: Graph
    coords: dict


PATH = build_graph([("u", "v"), ("v", "w")])


def straight(scale=1) -> Coords:
    return Coords(PATH, {"u": (0, 0), "v": (scale, 0), "w": (2 * scale, 0)})


def folded() -> Coords:
    return Coords(PATH, {"u": (0, 0), "v": (1, 0), "w": (Fraction(9, 10), Fraction(1, 20))})


# ============================================================================
# GREEDY CHECKS
# ============================================================================

def test_straight_path_passes_both_checks():
    for check in (check_greedy_pairwise, check_greedy_halfplane):
        report = check(straight())
        assert report.passed
        assert report.exact
        assert report.min_margin > 0


def test_folded_path_fails_both_checks():
    pairwise = check_greedy_pairwise(folded())
    assert not pairwise.passed
    assert ("w", "u") in {(f.source, f.target) for f in pairwise.failures}
    halfplane = check_greedy_halfplane(folded())
    assert not halfplane.passed
    assert all(f.edge is not None for f in halfplane.failures)
    assert "violations" in halfplane.summary()


def test_float_mode_scales_tolerance_with_diameter():
    dr = straight(scale=1.0)
    report = check_greedy_pairwise(dr, tol=1e-9)
    assert not report.exact
    assert report.passed
    assert report.tolerance == pytest.approx(2e-9)
    assert diameter(dr) == pytest.approx(2.0)


def test_exact_tolerance_is_absolute():
    # every improvement on the unit path is exactly 1
    assert check_greedy_pairwise(straight(), tol=Fraction(99, 100)).passed
    assert not check_greedy_pairwise(straight(), tol=1).passed
    assert not check_greedy_halfplane(straight(), tol=1).passed


def test_coincident_vertices_are_refused():
    dr = Coords(PATH, {"u": (0, 0), "v": (1, 0), "w": (0, 0)})
    with pytest.raises(CoincidentVerticesError):
        check_greedy_pairwise(dr)
    with pytest.raises(CoincidentVerticesError):
        check_greedy_pairwise(Coords(PATH, {"u": (0.0, 0.0), "v": (1.0, 0.0), "w": (0.0, 0.0)}))


def test_halfplane_needs_a_tree():
    triangle = cycle_graph(3)
    dr = Coords(triangle, {"c0": (0, 0), "c1": (1, 0), "c2": (0, 1)})
    with pytest.raises(TreeRequiredError):
        check_greedy_halfplane(dr)
    assert check_greedy_pairwise(dr).passed


def test_report_serializes():
    payload = check_greedy_pairwise(folded()).to_dict(max_failures=1)
    assert payload["passed"] is False
    assert len(payload["failures"]) == 1
    assert payload["failure_count"] >= 1


@given(random_trees(min_vertices=2, max_vertices=8), st.data())
@settings(max_examples=300, deadline=None)
def test_pairwise_and_halfplane_agree_on_trees(tree, data):
    points = data.draw(rational_points(len(tree)))
    dr = Coords(tree, dict(zip(tree.vertices, points)))
    assert check_greedy_pairwise(dr).passed == check_greedy_halfplane(dr).passed


# ============================================================================
# COORDINATES
# ============================================================================

def test_exact_coordinates():
    assert is_exact_coordinate(3)
    assert is_exact_coordinate(Fraction(1, 3))
    assert is_exact_coordinate(mpmath.mpf("0.5"))
    assert not is_exact_coordinate(0.5)
    assert not is_exact_coordinate(True)
    assert exact_value(mpmath.mpf("0.25")) == Fraction(1, 4)
    assert exact_value("7/2") == Fraction(7, 2)


# ============================================================================
# OPENING ANGLES
# ============================================================================

def test_single_edge_opens_fully():
    dr = Coords(path_graph(1), {"p0": (0, 0), "p1": (1, 0)})
    angle = measure_opening_angle(dr, ("p0", "p1"))
    assert isinstance(angle, OpenAngle)
    assert angle.degrees == 180.0
    assert angle.caveat


def test_two_leaves_at_right_angles():
    dr = Coords(
        build_graph([("r", "v"), ("v", "a"), ("v", "b")]),
        {"r": (-1, 0), "v": (0, 0), "a": (1, 1), "b": (1, -1)},
    )
    assert measure_opening_angle(dr, ("r", "v")).degrees == pytest.approx(90.0)


def test_folded_subtree_is_closed():
    dr = Coords(
        build_graph([("r", "v"), ("v", "a"), ("a", "b"), ("b", "c")]),
        {"r": (-1, 0), "v": (0, 0), "a": (2, 0), "b": (1, 1), "c": (1, -1)},
    )
    outcome = measure_opening_angle(dr, ("r", "v"))
    assert isinstance(outcome, Closed)
    assert outcome.degrees is None


def test_degenerate_subtree_edge():
    dr = Coords(
        build_graph([("r", "v"), ("v", "a")]),
        {"r": (-1, 0), "v": (0, 0), "a": (0, 0)},
    )
    with pytest.raises(DegenerateEdgeError):
        measure_opening_angle(dr, ("r", "v"))


def test_opening_from_rational_coordinates():
    dr = Coords(
        build_graph([("r", "v"), ("v", "a"), ("v", "b")]),
        {
            "r": (Fraction(-2, 3), Fraction(0)),
            "v": (Fraction(1, 3), Fraction(0)),
            "a": (Fraction(4, 3), Fraction(1)),
            "b": (Fraction(4, 3), Fraction(-1)),
        },
    )
    assert measure_opening_angle(dr, ("r", "v")).degrees == pytest.approx(90.0)
    shifted = Coords(dr.graph, {v: (x + Fraction(1, 7), y) for v, (x, y) in dr.coords.items()})
    assert measure_opening_angle(shifted, ("r", "v")).degrees == pytest.approx(90.0)


def test_opening_from_mpmath_coordinates():
    with mpmath.workprec(128):
        third = mpmath.mpf(1) / 3
        dr = Coords(
            build_graph([("r", "v"), ("v", "a"), ("v", "b")]),
            {"r": (-third, 0), "v": (third, 0), "a": (1 + third, third), "b": (1 + third, -third)},
        )
    expected = 180 - 2 * float(mpmath.degrees(mpmath.atan(third)))
    assert measure_opening_angle(dr, ("r", "v")).degrees == pytest.approx(expected)
