"""Shared fixtures and hypothesis strategies."""

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from greedy_graph import Graph, build_graph, parse_graph


@st.composite
def random_trees(draw, min_vertices: int = 2, max_vertices: int = 12) -> Graph:
    """Random labeled tree: vertex i > 0 hangs below a random earlier vertex."""
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    parents = [draw(st.integers(min_value=0, max_value=i - 1)) for i in range(1, n)]
    return build_graph([(f"v{p}", f"v{i}") for i, p in enumerate(parents, start=1)])


@st.composite
def max_degree_trees(draw, max_degree: int = 5, max_vertices: int = 14) -> Graph:
    """Random tree whose vertex degrees stay at or below max_degree."""
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    degree = {0: 0}
    edges = []
    for i in range(1, n):
        free = [v for v, d in degree.items() if d < max_degree]
        p = draw(st.sampled_from(free))
        degree[p] += 1
        degree[i] = 1
        edges.append((f"v{p}", f"v{i}"))
    return build_graph(edges)


@st.composite
def rational_points(draw, count: int) -> list[tuple[Fraction, Fraction]]:
    """count distinct points with small rational coordinates."""
    coordinate = st.fractions(min_value=-10, max_value=10, max_denominator=6)
    return draw(st.lists(st.tuples(coordinate, coordinate), min_size=count, max_size=count, unique=True))


@pytest.fixture
def caterpillar() -> Graph:
    """Degree-4 root with two B_1 branches."""
    return parse_graph("r a\nr b\nr c\nr d\na a1\na a2\nb b1\nb b2\n")


@pytest.fixture
def closed_pair_tree() -> Graph:
    """Two adjacent degree-5 vertices: each side of the middle edge is closed."""
    left = [("x", f"x{i}") for i in range(4)]
    right = [("y", f"y{i}") for i in range(4)]
    return build_graph([("x", "y")] + left + right)
