"""Tests for greedy_graph: parsing, decomposition, pseudo-tree split and root finding."""

import pytest
from hypothesis import given, settings

from greedy_graph import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    GraphKind,
    MalformedLineError,
    NoSuchRoot,
    NotATreeError,
    RootedTree,
    RootNotLeafError,
    SelfLoopError,
    TooManyCyclesError,
    build_graph,
    cycle_graph,
    cycle_vertices,
    decompose_at,
    find_all_open_root,
    glue,
    open_roots,
    parse_graph,
    path_graph,
    serialize_graph,
    split_pseudo_tree,
    star_graph,
    suppress_degree2,
)

from conftest import random_trees


# ============================================================================
# PARSING
# ============================================================================

def test_parse_keeps_first_appearance_order():
    g = parse_graph("b a\n# comment\n\na c\n")
    assert g.vertices == ("b", "a", "c")
    assert g.edges == (("b", "a"), ("a", "c"))
    assert g.kind is GraphKind.TREE


def test_parse_pseudo_tree():
    g = parse_graph("a b\nb c\nc a\nc d\n")
    assert g.is_pseudo_tree
    assert g.degree("c") == 3


@pytest.mark.parametrize(
    "text, error",
    [
        ("a b c\n", MalformedLineError),
        ("a\n", MalformedLineError),
        ("a a\n", SelfLoopError),
        ("a b\nb a\n", DuplicateEdgeError),
        ("a b\nc d\n", DisconnectedGraphError),
        ("a b\nb c\nc a\na d\nd b\n", TooManyCyclesError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_graph(text)


def test_serialize_is_canonical():
    g = parse_graph("x y\ny z\n")
    assert serialize_graph(g) == "x y\ny z\n"
    assert parse_graph(serialize_graph(g)) == g


def test_builders():
    star = star_graph(5)
    assert star.degree("r") == 5
    assert star.vertices[1:] == ("l0", "l1", "l2", "l3", "l4")
    assert path_graph(3).vertices == ("p0", "p1", "p2", "p3")
    assert cycle_graph(4).is_pseudo_tree


def test_general_graphs_only_when_allowed():
    edges = [("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "b")]
    assert build_graph(edges, allow_general=True).kind is GraphKind.OTHER


# ============================================================================
# DECOMPOSITION
# ============================================================================

def test_decompose_star():
    parts = decompose_at(star_graph(3), "r")
    assert [p.child for p in parts] == ["l0", "l1", "l2"]
    assert all(p.root == "r" and len(p.tree) == 2 for p in parts)


def test_rooted_tree_needs_leaf_root():
    with pytest.raises(RootNotLeafError):
        RootedTree(path_graph(2), "p1")


def test_decompose_rejects_pseudo_trees():
    with pytest.raises(NotATreeError):
        decompose_at(cycle_graph(3), "c0")


@given(random_trees(min_vertices=2, max_vertices=15))
@settings(max_examples=60, deadline=None)
def test_glue_inverts_decompose(tree):
    for r in tree.vertices:
        parts = decompose_at(tree, r)
        assert len(parts) == tree.degree(r)
        assert glue(parts).edge_set() == tree.edge_set()


def test_suppress_degree2_contracts_chains():
    g = parse_graph("a b\nb c\nc d\nc e\n")
    suppressed, mapping = suppress_degree2(g)
    assert "b" not in suppressed
    assert suppressed.edge_set() == {frozenset(("a", "c")), frozenset(("c", "d")), frozenset(("c", "e"))}
    assert mapping["b"] in ("a", "c")


# ============================================================================
# PSEUDO-TREES
# ============================================================================

def test_cycle_in_cyclic_order():
    g = parse_graph("t c0\nc0 c1\nc1 c2\nc2 c3\nc3 c0\n")
    cycle = cycle_vertices(g)
    assert set(cycle) == {"c0", "c1", "c2", "c3"}
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert frozenset((a, b)) in g.edge_set()


def test_split_adds_stub_edges():
    g = parse_graph("a b\nb c\nc a\nc d\nd e\n")
    parts = split_pseudo_tree(g)
    assert parts.hanging["a"] is None and parts.hanging["b"] is None
    hanging = parts.hanging["c"]
    assert hanging.root == "c'"
    assert hanging.child == "c"
    assert set(hanging.tree.vertices) == {"c'", "c", "d", "e"}


def test_split_stub_name_avoids_clashes():
    g = parse_graph("a b\nb c\nc a\nc c'\n")
    assert split_pseudo_tree(g).hanging["c"].root == "c''"


# ============================================================================
# ROOTS
# ============================================================================

def test_star_center_is_open_root():
    assert find_all_open_root(star_graph(5)) == "r"
    assert "r" in open_roots(star_graph(5))


def test_closed_pair_has_no_root(closed_pair_tree):
    outcome = find_all_open_root(closed_pair_tree)
    assert isinstance(outcome, NoSuchRoot)
    assert open_roots(closed_pair_tree) == []


@given(random_trees(min_vertices=2, max_vertices=12))
@settings(max_examples=60, deadline=None)
def test_first_open_root_is_first_of_all(tree):
    roots = open_roots(tree)
    first = find_all_open_root(tree)
    if roots:
        assert first == roots[0]
    else:
        assert isinstance(first, NoSuchRoot)
