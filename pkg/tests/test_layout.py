"""Tests for greedy_layout: tree, subtree and pseudo-tree drawings, JSON and SVG output."""

import json
from fractions import Fraction

import mpmath
import pytest
from hypothesis import HealthCheck, assume, given, settings

from certification import MAXIMAL_INFEASIBLE_VECTORS, Feasible, build_reduced_system, orbit_representatives, strict_feasible
from conftest import max_degree_trees
from greedy_graph import Graph, build_graph, cycle_graph, parse_graph, path_graph, star_graph
from greedy_layout import (
    CoordinateFormatError,
    Drawing,
    NotDrawable,
    OpeningTooLargeError,
    SvgOptions,
    deficit_rate,
    draw_pseudo_tree,
    draw_subtree,
    draw_tree,
    drawing_from_json,
    emit_svg,
    is_thin,
    ranked_wheel_orders,
    read_coordinates,
    required_margin,
    wheel_slack,
)
from greedy_verify import VerificationReport, Violation, check_greedy_halfplane, check_greedy_pairwise, measure_opening_angle
from opening_angles import TreeType, canonical_rooted_tree, parse_tree_type
from recognition import Rule, recognize_tree

MARGIN = 1e-9


def assert_greedy(drawing: Drawing) -> None:
    assert drawing.drawable
    assert drawing.report is not None and drawing.report.passed
    assert drawing.report.min_margin > MARGIN * drawing.diameter()
    assert check_greedy_pairwise(drawing, exact=True).passed


def hub_tree(*types: str) -> Graph:
    """A vertex 'hub' whose neighbors root canonical subtrees of the given types."""
    edges = []
    for i, text in enumerate(types):
        rt = canonical_rooted_tree(parse_tree_type(text), prefix=f"s{i}_")
        edges += [tuple("hub" if x == rt.root else x for x in e) for e in rt.tree.edges]
    return build_graph(edges)


def hung_cycle(m: int, hangers: dict[int, str]) -> Graph:
    """C_m on c0..c<m-1>; cycle vertex c<i> is the top of a hanging tree of type hangers[i]."""
    edges = [(f"c{i}", f"c{(i + 1) % m}") for i in range(m)]
    for i, text in hangers.items():
        rt = canonical_rooted_tree(parse_tree_type(text), prefix=f"h{i}_")
        rename = {rt.child: f"c{i}"}
        edges += [tuple(rename.get(x, x) for x in e) for e in rt.tree.edges if rt.root not in e]
    return build_graph(edges)


def caterpillar_tree(spine: int, legs: int) -> Graph:
    """Spine s0..s<spine-1> with `legs` leaves on every spine vertex."""
    edges = [(f"s{i}", f"s{i + 1}") for i in range(spine - 1)]
    edges += [(f"s{i}", f"s{i}_{j}") for i in range(spine) for j in range(legs)]
    return build_graph(edges)


def spider(legs: int, length: int) -> Graph:
    """`legs` paths of `length` edges glued at 'r'."""
    edges = []
    for i in range(legs):
        path = ["r"] + [f"g{i}_{j}" for j in range(length)]
        edges += list(zip(path, path[1:]))
    return build_graph(edges)


# ============================================================================
# TREES
# ============================================================================

def test_star_five_draws():
    drawing = draw_tree(star_graph(5))
    assert_greedy(drawing)
    assert check_greedy_halfplane(drawing, exact=True).passed


def test_star_six_is_not_drawable():
    outcome = draw_tree(star_graph(6))
    assert isinstance(outcome, NotDrawable)
    assert not outcome.drawable
    assert outcome.decision.rule is Rule.DEGREE_BOUND


def test_path_is_drawn_on_a_line():
    drawing = draw_tree(path_graph(6))
    assert_greedy(drawing)
    assert all(y == 0 for _, y in drawing.coords.values())
    assert drawing.trace[0]["strategy"] == "path"


def test_caterpillar_draws(caterpillar):
    assert_greedy(draw_tree(caterpillar))


def test_closed_pair_is_not_drawable(closed_pair_tree):
    assert isinstance(draw_tree(closed_pair_tree), NotDrawable)


@pytest.mark.parametrize(
    "types",
    [
        ("A", "A", "B1", "B1", "E110"),
        ("A", "A", "A", "B2", "B2"),
        ("A", "B1", "B1", "B1", "C01"),
    ],
    ids=",".join,
)
def test_degree_five_hubs_with_nested_types_draw(types):
    drawing = draw_tree(hub_tree(*types))
    assert_greedy(drawing)
    assert check_greedy_halfplane(drawing, exact=True).passed


@pytest.mark.parametrize("types", [("A", "A", "C01", "D110"), ("A", "B1", "B1", "B3")], ids=",".join)
def test_nested_drawings_keep_a_relative_margin(types):
    drawing = draw_tree(hub_tree(*types))
    assert_greedy(drawing)


TREE_HUBS = [
    # degree 3
    ("A", "A", "B1"),
    ("A", "B1", "B1"),
    ("B1", "B1", "B1"),
    ("A", "A", "C01"),
    ("A", "B2", "C01"),
    ("B1", "C01", "D110"),
    ("A", "A", "B3"),
    ("A", "B1", "E110"),
    ("A", "A", "D110"),
    ("B2", "B2", "B2"),
    # degree 4
    ("A", "A", "A", "B1"),
    ("A", "A", "B1", "B1"),
    ("A", "B1", "B1", "B1"),
    ("B1", "B1", "B1", "B1"),
    ("A", "A", "A", "C01"),
    ("A", "A", "C01", "D110"),
    ("A", "B1", "B1", "B3"),
    ("A", "A", "B2", "B2"),
    ("A", "A", "B1", "C01"),
    ("A", "A", "A", "B2"),
    # degree 5: reference rows and the two 180-led rules
    ("A", "B1", "B1", "B1", "C01"),
    ("A", "B1", "B1", "B2", "C01"),
    ("A", "B1", "B2", "B2", "C01"),
    ("A", "B1", "B2", "B2", "B2"),
    ("A", "B2", "B2", "B2", "B2"),
    ("A", "A", "B1", "B1", "E110"),
    ("A", "A", "A", "B2", "B2"),
    ("A", "A", "A", "B1", "C01"),
    ("A", "A", "A", "A", "B1"),
    ("A", "A", "A", "B1", "B1"),
    ("A", "A", "B1", "B1", "B1"),
    ("A", "A", "A", "A", "C01"),
]

ACCEPTED_TREES = (
    [pytest.param(path_graph(n), id=f"path{n}") for n in range(1, 7)]
    + [pytest.param(star_graph(n), id=f"star{n}") for n in range(1, 6)]
    + [
        pytest.param(hub_tree(*t), id=",".join(t), marks=[pytest.mark.slow] if len(t) == 5 else [])
        for t in TREE_HUBS
    ]
    + [pytest.param(caterpillar_tree(s, k), id=f"caterpillar{s}x{k}") for s in range(2, 6) for k in (1, 2)]
    + [pytest.param(spider(k, 2), id=f"spider{k}") for k in (3, 4, 5)]
)


def test_acceptance_suite_is_large_enough():
    assert len(ACCEPTED_TREES) >= 50


@pytest.mark.parametrize("tree", ACCEPTED_TREES)
def test_accepted_trees_draw_with_margin(tree):
    assert recognize_tree(tree).drawable
    assert_greedy(draw_tree(tree))


@pytest.mark.slow
@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(max_degree_trees(max_degree=5, max_vertices=30))
def test_random_accepted_trees_draw_with_margin(tree):
    assume(recognize_tree(tree).drawable)
    assert_greedy(draw_tree(tree))


def test_wheel_orders_are_ranked_by_slack():
    values = [Fraction(v) for v in (180, 120, 120, 120, 60)]
    ranked = ranked_wheel_orders(values)
    assert ranked
    slacks = [slack for _, slack in ranked]
    assert slacks == sorted(slacks, reverse=True)
    assert all(slack > 0 for slack in slacks)


def test_wheel_slack_agrees_with_strict_feasibility():
    values = [Fraction(v) for v in MAXIMAL_INFEASIBLE_VECTORS[0]]
    for tau, _ in orbit_representatives(values):
        slack = wheel_slack(values, tau)
        outcome = strict_feasible(build_reduced_system(values, tau))
        if isinstance(outcome, Feasible):
            assert min(slack, 1) == outcome.slack
        else:
            assert slack == 0
    assert wheel_slack([Fraction(180)] * 5) > 0


@pytest.mark.parametrize("text, rate", [("A", 0), ("B1", 2), ("B3", 2), ("D110", 6), ("E110", Fraction(9, 2))])
def test_deficit_rate_of_canonical_trees(text, rate):
    assert deficit_rate(canonical_rooted_tree(parse_tree_type(text))) == rate


# ============================================================================
# MARGINS
# ============================================================================

def test_required_margin_scales_with_the_diameter():
    small = Drawing(path_graph(1), {"p0": (0, 0), "p1": (1, 0)})
    large = Drawing(path_graph(1), {"p0": (0, 0), "p1": (1000, 0)})
    assert required_margin(large) == 1000 * required_margin(small)
    assert required_margin(small) == Fraction(MARGIN)


def test_is_thin_only_for_greedy_reports_below_the_margin():
    miss = (Violation("a", "c", 0.25),)
    assert is_thin(VerificationReport("pairwise", True, 0.5, 0.25, miss))
    assert not is_thin(VerificationReport("pairwise", True, 0.5, -0.25, miss))
    assert not is_thin(VerificationReport("pairwise", True, 0.1, 0.25))


# ============================================================================
# SUBTREES
# ============================================================================

@pytest.mark.parametrize("tt, opening", [(TreeType.a(), 179), (TreeType.a(), 180), (TreeType.b(1), 119)], ids=str)
def test_subtree_meets_requested_opening(tt, opening):
    drawing = draw_subtree(tt, (0, 0), 90, opening, 1)
    assert drawing.report.passed
    (cone,) = drawing.cones
    assert cone.opening >= opening
    stub = next(v for v in drawing.graph.vertices if v not in drawing.shrunk)
    measured = measure_opening_angle(drawing, (stub, cone.vertex))
    assert not measured.closed
    assert not measured.caveat


@pytest.mark.parametrize("tt, opening", [(TreeType.b(1), 120), (TreeType.b(2), 106), (TreeType.no_open_angle(), 1)], ids=str)
def test_subtree_opening_at_or_above_supremum(tt, opening):
    with pytest.raises(OpeningTooLargeError):
        draw_subtree(tt, (0, 0), 0, opening, 1)


def test_subtree_keeps_the_apex_it_was_given():
    with mpmath.workprec(128):
        apex = (mpmath.mpf(1) / 3, mpmath.mpf(2) / 7)
    drawing = draw_subtree(TreeType.b(2), apex, 45, 100, Fraction(1, 4))
    (cone,) = drawing.cones
    assert drawing.coords[cone.vertex] == apex
    assert drawing.report.passed


# ============================================================================
# PSEUDO-TREES
# ============================================================================

@pytest.mark.parametrize("m", range(3, 13))
def test_bare_cycles_draw(m):
    assert_greedy(draw_pseudo_tree(cycle_graph(m)))


def test_cycle_with_leaves_draws():
    edges = [("c0", "c1"), ("c1", "c2"), ("c2", "c3"), ("c3", "c0"), ("c0", "x"), ("c2", "y")]
    assert_greedy(draw_pseudo_tree(build_graph(edges)))


def test_closed_hanger_uses_the_auxiliary_tree():
    drawing = draw_pseudo_tree(parse_graph("a b\nb c\nc d\nd a\na x1\na x2\na x3\na x4"))
    assert_greedy(drawing)
    assert drawing.trace[0]["strategy"] == "auxiliary-tree"


def test_triangle_with_e_hangers_is_not_drawable():
    edges = [("c0", "c1"), ("c1", "c2"), ("c2", "c0")]
    for i in range(3):
        c = f"c{i}"
        edges += [(c, f"h{i}"), (c, f"g{i}"), (f"g{i}", f"g{i}a"), (f"g{i}", f"g{i}b")]
        edges += [(c, f"f{i}"), (f"f{i}", f"f{i}a"), (f"f{i}", f"f{i}b")]
    assert isinstance(draw_pseudo_tree(build_graph(edges)), NotDrawable)


OPEN_HANGERS = [
    (3, {0: "B1", 1: "B1", 2: "B1"}),
    (3, {0: "C01", 1: "B1"}),
    (3, {0: "E110"}),
    (4, {0: "B1", 1: "B1", 2: "B1", 3: "B1"}),
    (4, {0: "B2", 1: "B2"}),
    (4, {0: "C01"}),
    (4, {0: "D110", 2: "B1"}),
    (5, {0: "B1", 2: "B1"}),
    (5, {i: "B1" for i in range(5)}),
    (6, {0: "B1", 2: "B1", 4: "B1"}),
    (8, {0: "B1", 2: "B1", 4: "B1", 6: "B1"}),
]

CLOSED_HANGERS = [
    (3, {0: "NoOpenAngle"}),
    (4, {0: "NoOpenAngle"}),
    (5, {0: "NoOpenAngle"}),
    (6, {0: "NoOpenAngle"}),
    (4, {0: "NoOpenAngle", 2: "B1"}),
    (5, {0: "NoOpenAngle", 1: "B1"}),
]


def _hanger_id(case) -> str:
    m, hangers = case
    return f"C{m}:" + ",".join(f"{i}={t}" for i, t in sorted(hangers.items()))


ACCEPTED_PSEUDO_TREES = (
    [pytest.param(cycle_graph(m), id=f"C{m}") for m in range(3, 13)]
    + [pytest.param(hung_cycle(*case), id=_hanger_id(case)) for case in OPEN_HANGERS]
    + [pytest.param(hung_cycle(*case), id=_hanger_id(case)) for case in CLOSED_HANGERS]
)


def test_pseudo_tree_suite_is_large_enough():
    assert len(ACCEPTED_PSEUDO_TREES) >= 20


@pytest.mark.parametrize("graph", ACCEPTED_PSEUDO_TREES)
def test_accepted_pseudo_trees_draw_with_margin(graph):
    drawing = draw_pseudo_tree(graph)
    assert_greedy(drawing)


# ============================================================================
# OUTPUT
# ============================================================================

def test_json_round_trip_keeps_greedy_property():
    drawing = draw_tree(star_graph(4))
    document = json.loads(drawing.to_json(exact=True))
    assert document["verification"]["passed"] is True
    restored = drawing_from_json(drawing.to_json(exact=True))
    assert restored.graph == drawing.graph
    assert check_greedy_pairwise(restored).exact
    assert check_greedy_pairwise(restored).passed


def test_read_coordinates_accepts_bare_mappings():
    graph = path_graph(2)
    drawing = read_coordinates(graph, {"p0": ["0", "0"], "p1": ["1/2", 0], "p2": [1, 0]})
    assert check_greedy_pairwise(drawing).passed
    with pytest.raises(CoordinateFormatError):
        read_coordinates(graph, {"p0": [0, 0], "p1": [1, 0]})
    with pytest.raises(CoordinateFormatError):
        read_coordinates(graph, {"p0": [0, 0], "p1": ["one", 0], "p2": [2, 0]})
    with pytest.raises(CoordinateFormatError):
        drawing_from_json("not json")


def test_svg_lists_every_vertex_and_edge():
    drawing = draw_tree(star_graph(5))
    svg = emit_svg(drawing)
    assert svg.startswith('<?xml version="1.0"')
    assert svg.count("<circle") == 6
    assert svg.count("<line") == 5
    assert 'class="cones"' not in svg
    assert 'class="cones"' in emit_svg(drawing, SvgOptions(cones=True))


def test_svg_is_deterministic():
    first = emit_svg(draw_tree(star_graph(5)), SvgOptions(cones=True))
    second = emit_svg(draw_tree(star_graph(5)), SvgOptions(cones=True))
    assert first == second


def test_svg_of_hand_made_drawing():
    drawing = Drawing(path_graph(2), {"p0": (0, 0), "p1": (1, 0), "p2": (2, 0)})
    svg = emit_svg(drawing, SvgOptions(width=100, height=100, margin=10))
    assert '<circle cx="10.000000" cy="90.000000"' in svg
    assert '<circle cx="90.000000" cy="90.000000"' in svg
