"""Tests for opening_angles: tree types, suprema and the classification buckets."""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greedy_graph import RootedTree, build_graph, decompose_at
from opening_angles import (
    CATCH_ALL_BUCKET,
    ANGLE_BUCKETS,
    ExactAngle,
    InvalidAngleError,
    InvalidTreeTypeError,
    TreeType,
    TreeVariant,
    UnlistedAngleError,
    angle_bucket,
    canonical_rooted_tree,
    classify_rooted,
    combine_child_types,
    format_degrees,
    opening_angle_sup,
    parse_tree_type,
    type_sort_key,
)

from conftest import random_trees


def all_types(limit: int) -> list[TreeType]:
    """Every open type with parameters up to limit."""
    types = [TreeType.a()]
    types += [TreeType.b(n) for n in range(1, limit + 1)]
    types += [TreeType.c(k, n) for k, n in product(range(limit + 1), range(1, limit + 1))]
    for k, l, n in product(range(1, limit + 1), range(1, limit + 1), range(limit + 1)):
        if k <= l:
            types += [TreeType.d(k, l, n), TreeType.e(k, l, n)]
    return types


# ============================================================================
# SUPREMA
# ============================================================================

@pytest.mark.parametrize(
    "text, degrees",
    [
        ("A", 180),
        ("B_1", 120),
        ("B_2", 105),
        ("B_3", Fraction(195, 2)),
        ("C_{0,1}", 60),
        ("C_{1,1}", 60),
        ("C_{2,1}", Fraction(105, 2)),
        ("C_{0,2}", 30),
        ("D_{1,1,0}", 60),
        ("D_{1,2,0}", 45),
        ("D_{1,1,1}", 30),
        ("E_{1,1,0}", Fraction(75, 2)),
        ("E_{1,2,0}", 30),
    ],
)
def test_known_suprema(text, degrees):
    assert opening_angle_sup(parse_tree_type(text)).value == degrees


def test_only_a_is_attained():
    assert opening_angle_sup(TreeType.a()).attained
    assert not opening_angle_sup(TreeType.b(1)).attained
    assert str(opening_angle_sup(TreeType.b(1))) == "120-"


def test_no_open_angle_is_non_positive():
    angle = opening_angle_sup(TreeType.no_open_angle())
    assert not angle.is_positive
    assert str(angle) == "<=0"


def test_every_supremum_lands_in_one_bucket():
    for tt in all_types(6):
        value = opening_angle_sup(tt).value
        hits = [b for b in ANGLE_BUCKETS if b.contains(value)]
        assert len(hits) == 1, f"{tt}: {value} in {[b.label for b in hits]}"


def test_buckets_above_catch_all_are_suprema():
    values = {opening_angle_sup(tt).value for tt in all_types(6)}
    for bucket in ANGLE_BUCKETS:
        if bucket is CATCH_ALL_BUCKET:
            continue
        assert any(bucket.contains(v) for v in values), bucket.label


def test_unlisted_angle():
    with pytest.raises(UnlistedAngleError):
        angle_bucket(Fraction(100))
    with pytest.raises(UnlistedAngleError):
        angle_bucket(ExactAngle.non_positive())
    assert angle_bucket(Fraction(7)) is CATCH_ALL_BUCKET


def test_exact_angle_guards():
    with pytest.raises(InvalidAngleError):
        ExactAngle(Fraction(200))
    with pytest.raises(InvalidAngleError):
        ExactAngle(Fraction(90), attained=True)


def test_format_degrees():
    assert format_degrees(Fraction(1455, 16)) == "90.9375"
    assert format_degrees(Fraction(120)) == "120"
    assert format_degrees(Fraction(1, 3)) == "1/3"


# ============================================================================
# TYPES
# ============================================================================

def test_parse_tree_type_variants():
    assert parse_tree_type("B2") == TreeType.b(2)
    assert parse_tree_type("D_{2,1,0}") == TreeType.d(1, 2, 0)
    assert parse_tree_type("NoOpenAngle") == TreeType.no_open_angle()
    with pytest.raises(InvalidTreeTypeError):
        parse_tree_type("F1")
    with pytest.raises(InvalidTreeTypeError):
        TreeType(TreeVariant.B, n=0)


def test_combination_rules():
    a, b1 = TreeType.a(), TreeType.b(1)
    assert combine_child_types([]) == a
    assert combine_child_types([a, a]) == b1
    assert combine_child_types([a, b1]) == TreeType.b(2)
    assert combine_child_types([a, a, a]) == TreeType.c(0, 1)
    assert combine_child_types([b1, TreeType.b(2)]) == TreeType.d(1, 2, 0)
    assert combine_child_types([a, b1, b1]) == TreeType.e(1, 1, 0)
    assert combine_child_types([a, a, a, a]) == TreeType.no_open_angle()
    assert combine_child_types([b1, b1, b1]) == TreeType.no_open_angle()


def test_sort_key_orders_variants():
    types = [TreeType.no_open_angle(), TreeType.e(1, 1, 0), TreeType.a(), TreeType.c(0, 1), TreeType.b(2)]
    ordered = sorted(types, key=type_sort_key)
    assert [t.variant for t in ordered] == [
        TreeVariant.A, TreeVariant.B, TreeVariant.C, TreeVariant.E, TreeVariant.NO_OPEN_ANGLE,
    ]


# ============================================================================
# CLASSIFICATION
# ============================================================================

@pytest.mark.parametrize("tt", all_types(3) + [TreeType.no_open_angle()], ids=str)
def test_canonical_tree_has_its_type(tt):
    rt = canonical_rooted_tree(tt)
    assert classify_rooted(rt) == tt


@pytest.mark.parametrize("tt", [TreeType.b(2), TreeType.c(1, 2), TreeType.e(1, 2, 1)], ids=str)
def test_subdividing_the_stub_keeps_the_type(tt):
    rt = canonical_rooted_tree(tt)
    edges = [e for e in rt.tree.edges if rt.root not in e]
    edges += [(rt.root, "mid"), ("mid", rt.child)]
    assert classify_rooted(RootedTree(build_graph(edges), rt.root)) == tt


@given(random_trees(min_vertices=3, max_vertices=14), st.data())
@settings(max_examples=60, deadline=None)
def test_classification_matches_bottom_up_combination(tree, data):
    r = data.draw(st.sampled_from(tree.vertices))
    for rt in decompose_at(tree, r):
        below = [
            classify_rooted(sub)
            for sub in decompose_at(rt.tree, rt.child)
            if sub.child != rt.root
        ]
        assert classify_rooted(rt) == combine_child_types(below)
