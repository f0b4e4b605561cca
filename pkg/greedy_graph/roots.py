"""Finding a vertex whose rooted subtrees all have open angles.

    For every directed edge (u, v) the type of the rooted tree T^v_{uv} + uv is
    computed once, with a down pass and an up pass over a BFS order (the usual
    rerooting scheme), so the whole search is linear in the tree size.

    If no vertex qualifies, following "closed" arcs u -> v (the side of v cannot
    be drawn with an open angle) must eventually reverse along one edge; that
    edge is returned as the certifying 2-cycle.
"""

from collections import deque
from dataclasses import dataclass

from opening_angles.tree_types import TreeType, combine_child_types

from .graph import Graph, NotATreeError


@dataclass(frozen=True)
class NoSuchRoot:
    """No vertex has all rooted subtrees open; a -> b -> a is a 2-cycle of
    closed arcs: neither T^b_{ab} + ab nor T^a_{ab} + ab has an open angle."""
    cycle: tuple[str, str]


def directed_types(tree: Graph) -> dict[tuple[str, str], TreeType]:
    """Map (u, v) -> type of the rooted tree with stub u and child v, for every arc."""
    if not tree.is_tree:
        raise NotATreeError(f"expected a tree, got {tree.kind.value}")
    start = tree.vertices[0]
    parent: dict[str, str | None] = {start: None}
    order = [start]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in tree.neighbors(x):
            if y not in parent:
                parent[y] = x
                order.append(y)
                queue.append(y)

    types: dict[tuple[str, str], TreeType] = {}
    for v in reversed(order):
        p = parent[v]
        if p is not None:
            types[(p, v)] = combine_child_types(types[(v, c)] for c in tree.neighbors(v) if c != p)

    for p in order:
        nbrs = tree.neighbors(p)
        for c in nbrs:
            if parent.get(c) == p:
                if len(nbrs) > 5:
                    # at least five other children: no open angle whatever they are
                    types[(c, p)] = TreeType.no_open_angle()
                else:
                    types[(c, p)] = combine_child_types(types[(p, w)] for w in nbrs if w != c)
    return types


def open_roots(tree: Graph) -> list[str]:
    """All vertices u such that every rooted subtree at u has an open angle, in vertex order."""
    types = directed_types(tree)
    return [
        u for u in tree.vertices
        if all(types[(u, v)].is_open for v in tree.neighbors(u))
    ]


def find_all_open_root(tree: Graph) -> str | NoSuchRoot:
    """First vertex (in input order) whose rooted subtrees are all open, or a certifying 2-cycle.

    Args:
        tree: A tree with at least two vertices

    Returns:
        The vertex, or NoSuchRoot carrying an edge (a, b) closed in both directions
    """
    types = directed_types(tree)
    for u in tree.vertices:
        if all(types[(u, v)].is_open for v in tree.neighbors(u)):
            return u

    prev, cur = None, tree.vertices[0]
    while True:
        if prev is not None and not types[(cur, prev)].is_open:
            return NoSuchRoot(cycle=(prev, cur))
        nxt = next(v for v in tree.neighbors(cur) if v != prev and not types[(cur, v)].is_open)
        prev, cur = cur, nxt
