"""Tests for recognition: angle vectors, trees, pseudo-trees and table enumeration."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from certification import MAXIMAL_INFEASIBLE_VECTORS
from greedy_graph import NotATreeError, build_graph, cycle_graph, open_roots, parse_graph, path_graph, star_graph
from opening_angles import ExactAngle, TreeType
from recognition import (
    DEGREE_FIVE_ROWS,
    AngleVector,
    NonPositiveAngleError,
    RecognitionError,
    Rule,
    angle_vector_at,
    compress_rows,
    enumerate_feasible_combinations,
    match_degree_five_row,
    recognize_angle_vector,
    recognize_pseudo_tree,
    recognize_tree,
    row_labels,
)
from recognition.enumerate import accepted_bucket_tuples

from conftest import max_degree_trees, random_trees


def vector(*values) -> AngleVector:
    return AngleVector.of(Fraction(v) for v in values)


def hang(edges: list, parent: str, tt: TreeType, name: str) -> None:
    """Append a subtree of type A, B_n or E_{k,l,0} below parent."""
    edges.append((parent, name))
    if tt == TreeType.a():
        return
    if tt.variant.value == "B":
        edges.append((name, f"{name}a"))
        hang(edges, name, TreeType.a() if tt.n == 1 else TreeType.b(tt.n - 1), f"{name}b")
        return
    edges.append((name, f"{name}a"))
    hang(edges, name, TreeType.b(tt.k), f"{name}k")
    hang(edges, name, TreeType.b(tt.l), f"{name}l")


# ============================================================================
# ANGLE VECTORS
# ============================================================================

def test_angle_vector_sorts():
    assert vector(60, 180, 120).degrees == (180, 120, 60)
    with pytest.raises(RecognitionError):
        AngleVector(())


def test_small_degrees_need_strict_sum():
    assert not recognize_angle_vector(vector(60, 60, 60)).drawable
    assert recognize_angle_vector(vector(60, 60, Fraction(121, 2))).drawable
    assert recognize_angle_vector(vector(180, 180, 120, 120)).rule is Rule.ANGLE_SUM
    assert not recognize_angle_vector(vector(120, 120, 60, 60)).drawable


def test_degree_five_cases():
    assert recognize_angle_vector(vector(180, 180, 180, 61, 60)).rule is Rule.CASE_180_180_180
    assert not recognize_angle_vector(vector(180, 180, 180, 60, 60)).drawable
    assert recognize_angle_vector(vector(180, 180, 120, 60, 61)).drawable
    assert not recognize_angle_vector(vector(180, 180, 120, 60, 60)).drawable
    assert not recognize_angle_vector(vector(*[105] * 5)).drawable
    assert recognize_angle_vector(vector(*[120] * 4 + [Fraction(181, 2)])).rule is Rule.CASE_NONMAX


def test_degree_six_is_never_drawable():
    decision = recognize_angle_vector(vector(*[180] * 6))
    assert not decision.drawable
    assert decision.rule is Rule.DEGREE_BOUND


def test_non_positive_entries_are_refused():
    with pytest.raises(NonPositiveAngleError):
        recognize_angle_vector(AngleVector((ExactAngle.of(180), ExactAngle.non_positive())))


@pytest.mark.parametrize("values", MAXIMAL_INFEASIBLE_VECTORS, ids=lambda v: ",".join(map(str, v)))
def test_maximal_infeasible_vectors_are_rejected(values):
    decision = recognize_angle_vector(AngleVector.of(values))
    assert not decision.drawable
    assert decision.rule is Rule.DEGREE_FIVE_ROW


@pytest.mark.parametrize(
    "tail, row",
    [
        ((120, 120, 120, 120), "I"),
        ((120, 120, 120, Fraction(135, 4)), "I"),
        ((120, 120, 105, 45), "II"),
        ((120, 105, 105, 105), "VI"),
        ((120, Fraction(195, 2), Fraction(195, 2), Fraction(195, 2)), "VII"),
        ((105, Fraction(195, 2), Fraction(195, 2), Fraction(195, 2)), "VIII"),
        ((Fraction(195, 2), Fraction(195, 2), Fraction(195, 2), Fraction(1455, 16)), "XI"),
    ],
)
def test_ranged_rows_accept(tail, row):
    assert match_degree_five_row(tuple(Fraction(v) for v in tail)) == row
    decision = recognize_angle_vector(vector(180, *tail))
    assert decision.drawable
    assert decision.witness == {"row": row}


def test_ranged_row_ends_are_strict_where_open():
    # (90, 105] excludes 90
    assert match_degree_five_row((Fraction(120), Fraction(90), Fraction(90), Fraction(90))) is None
    assert match_degree_five_row((Fraction(120), Fraction(120), Fraction(120), Fraction(30))) is None
    assert len(DEGREE_FIVE_ROWS) == 11


# ============================================================================
# TREES
# ============================================================================

def test_star_six_hits_degree_bound():
    decision = recognize_tree(star_graph(6))
    assert not decision.drawable
    assert decision.rule is Rule.DEGREE_BOUND
    assert decision.witness == {"vertex": "r", "degree": 6}


def test_star_five_is_drawable():
    decision = recognize_tree(star_graph(5))
    assert decision.drawable
    assert decision.root == "r"
    assert decision.rule is Rule.CASE_180_180_180


def test_paths_are_drawable():
    assert recognize_tree(path_graph(1)).drawable
    assert recognize_tree(path_graph(9)).drawable


def test_caterpillar(caterpillar):
    decision = recognize_tree(caterpillar)
    assert decision.drawable
    assert decision.angles.degrees == (180, 180, 120, 120)
    assert sorted(str(t) for t in decision.subtree_types) == ["A", "A", "B_1", "B_1"]


def test_closed_pair(closed_pair_tree):
    decision = recognize_tree(closed_pair_tree)
    assert not decision.drawable
    assert decision.rule is Rule.CLOSED_PAIR
    assert set(decision.witness["cycle"]) == {"x", "y"}


def test_five_b2_subtrees_are_rejected():
    edges: list = []
    for i in range(5):
        hang(edges, "r", TreeType.b(2), f"s{i}")
    decision = recognize_tree(build_graph(edges))
    assert not decision.drawable
    assert decision.witness["sum"] == 525


def test_recognize_tree_refuses_cycles():
    with pytest.raises(NotATreeError):
        recognize_tree(cycle_graph(4))


def test_decision_serializes_fractions():
    payload = recognize_tree(parse_graph("r a\nr b\nr c\na a1\na a2\n")).to_dict()
    assert payload["drawable"] is True
    assert payload["angles"] == ["180", "180", "120"]
    assert payload["witness"] == {"sum": "480", "bound": "180"}


@given(max_degree_trees(max_degree=5, max_vertices=14))
@settings(max_examples=80, deadline=None)
def test_decision_does_not_depend_on_the_open_root(tree):
    decision = recognize_tree(tree)
    if tree.max_degree <= 2 or decision.rule is Rule.CLOSED_PAIR:
        return
    for root in open_roots(tree):
        vec, _ = angle_vector_at(tree, root)
        assert recognize_angle_vector(vec).drawable == decision.drawable


@given(random_trees(min_vertices=2, max_vertices=16))
@settings(max_examples=60, deadline=None)
def test_high_degree_trees_are_rejected(tree):
    if tree.max_degree >= 6:
        assert not recognize_tree(tree).drawable


# ============================================================================
# PSEUDO-TREES
# ============================================================================

@pytest.mark.parametrize("m", range(3, 13))
def test_bare_cycles_are_drawable(m):
    decision = recognize_pseudo_tree(cycle_graph(m))
    assert decision.drawable
    assert decision.witness["sum"] == 180 * m
    assert decision.witness["bound"] == 180 * (m - 2)


def test_triangle_with_e_hangers_is_rejected():
    edges = [("c0", "c1"), ("c1", "c2"), ("c2", "c0")]
    for i in range(3):
        hang(edges, f"c{i}", TreeType.a(), f"h{i}")
        hang(edges, f"c{i}", TreeType.b(1), f"g{i}")
        hang(edges, f"c{i}", TreeType.b(1), f"f{i}")
    decision = recognize_pseudo_tree(build_graph(edges))
    assert [str(t) for t in decision.subtree_types] == ["E_{1,1,0}"] * 3
    assert decision.witness["sum"] == Fraction(225, 2)
    assert not decision.drawable


def test_two_closed_cycle_vertices():
    edges = [("c0", "c1"), ("c1", "c2"), ("c2", "c3"), ("c3", "c0")]
    for v in ("c0", "c1"):
        edges += [(v, f"{v}x{i}") for i in range(4)]
    decision = recognize_pseudo_tree(build_graph(edges))
    assert not decision.drawable
    assert set(decision.witness["non_positive"]) == {"c0", "c1"}


def test_one_closed_cycle_vertex_can_be_drawable():
    edges = [("c0", "c1"), ("c1", "c2"), ("c2", "c3"), ("c3", "c0")]
    edges += [("c0", f"x{i}") for i in range(4)]
    decision = recognize_pseudo_tree(build_graph(edges))
    # the three bare vertices give 540 > 360
    assert decision.drawable


def test_recognize_pseudo_tree_refuses_trees():
    with pytest.raises(NotATreeError):
        recognize_pseudo_tree(path_graph(3))


# ============================================================================
# ENUMERATION
# ============================================================================

@pytest.mark.parametrize("d", [1, 2])
def test_small_degrees_accept_everything(d):
    rows = enumerate_feasible_combinations(d)
    assert [row_labels(r) for r in rows] == [tuple("(0, 180]" for _ in range(d))]


@pytest.mark.parametrize("d", [3, 4])
def test_enumerated_rows_are_drawable_at_their_upper_ends(d):
    rows = enumerate_feasible_combinations(d)
    assert rows
    for row in rows:
        assert recognize_angle_vector(AngleVector.of(c.upper for c in row)).drawable


def test_degree_three_rows():
    labels = {row_labels(r) for r in enumerate_feasible_combinations(3)}
    assert ("180", "180", "(0, 180]") in labels
    assert not any(row[:2] == ("60", "60") for row in labels)


def test_compress_rows_falls_back_to_full_range():
    accepted = accepted_bucket_tuples(2)
    assert [row_labels(r) for r in compress_rows(2, accepted)] == [("(0, 180]", "(0, 180]")]


def test_enumerate_rejects_bad_degree():
    with pytest.raises(ValueError):
        enumerate_feasible_combinations(6)
