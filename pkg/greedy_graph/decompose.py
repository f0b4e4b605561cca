"""Rooted subtrees: decomposition of a tree around a vertex, gluing, and the
cycle/hanging-tree split of a pseudo-tree.

    A RootedTree is a tree with a designated degree-1 root (the attachment stub).
    decompose_at(t, r) returns one RootedTree per neighbor of r; glue() is its
    inverse. split_pseudo_tree() finds the unique cycle by repeated leaf deletion
    and extends every hanging tree by a stub edge so it can be classified.
"""

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    GraphKind,
    NotATreeError,
    VertexNotFoundError,
    build_graph,
)


class RootNotLeafError(GraphError):
    """The designated root of a rooted tree does not have exactly one neighbor."""


@dataclass(frozen=True)
class RootedTree:
    """A tree with a degree-1 root r; `child` is r's unique neighbor."""
    tree: Graph
    root: str

    def __post_init__(self):
        if not self.tree.is_tree:
            raise NotATreeError(f"rooted tree needs a tree, got {self.tree.kind.value}")
        if self.root not in self.tree:
            raise VertexNotFoundError(f"root '{self.root}' is not in the tree")
        if self.tree.degree(self.root) != 1:
            raise RootNotLeafError(
                f"root '{self.root}' has degree {self.tree.degree(self.root)}, expected 1"
            )

    @property
    def child(self) -> str:
        return self.tree.neighbors(self.root)[0]

    def children_of(self, v: str, parent: str) -> tuple[str, ...]:
        return tuple(u for u in self.tree.neighbors(v) if u != parent)


def directed_component(graph: Graph, u: str, v: str) -> list[str]:
    """Vertices of the component of graph - uv that contains v, in BFS order from v."""
    seen = {u, v}
    order = [v]
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in graph.neighbors(x):
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def decompose_at(tree: Graph, r: str) -> list[RootedTree]:
    """Split a tree into the rooted subtrees T_i = T^{v_i}_{r v_i} + r v_i.

    Args:
        tree: A tree
        r: Vertex of degree d >= 1

    Returns:
        d rooted trees in the order of r's neighbors, each rooted at r
    """
    if not tree.is_tree:
        raise NotATreeError(f"decompose_at needs a tree, got {tree.kind.value}")
    if r not in tree:
        raise VertexNotFoundError(f"vertex '{r}' is not in the tree")

    parts: list[RootedTree] = []
    for v in tree.neighbors(r):
        members = set(directed_component(tree, r, v))
        vertices = [r] + [x for x in tree.vertices if x in members]
        edges = [(a, b) for a, b in tree.edges if (a in members and b in members)]
        edges.insert(0, (r, v))
        parts.append(RootedTree(build_graph(edges, vertices=vertices), r))
    return parts


def glue(parts: Sequence[RootedTree]) -> Graph:
    """Glue rooted trees at their common root (inverse of decompose_at)."""
    if not parts:
        raise GraphError("nothing to glue")
    root = parts[0].root
    if any(p.root != root for p in parts):
        raise GraphError("rooted trees must share the same root to be glued")
    vertices: dict[str, None] = {root: None}
    edges: list[tuple[str, str]] = []
    for p in parts:
        vertices.update(dict.fromkeys(p.tree.vertices))
        edges.extend(p.tree.edges)
    return build_graph(edges, vertices=vertices)


@dataclass(frozen=True)
class PseudoTreeParts:
    """The unique cycle of a pseudo-tree (in cyclic order) and, per cycle vertex,
    its hanging tree extended by a stub edge, or None for a bare cycle vertex."""
    cycle: tuple[str, ...]
    hanging: dict[str, RootedTree | None]


def _fresh_name(graph: Graph, base: str) -> str:
    name = f"{base}'"
    while name in graph:
        name += "'"
    return name


def cycle_vertices(graph: Graph) -> tuple[str, ...]:
    """The cycle of a pseudo-tree in cyclic order, found by repeated leaf deletion."""
    if graph.kind is not GraphKind.PSEUDO_TREE:
        raise NotATreeError(f"expected a pseudo-tree, got {graph.kind.value}")
    degree = {v: graph.degree(v) for v in graph.vertices}
    queue = deque(v for v in graph.vertices if degree[v] == 1)
    removed: set[str] = set()
    while queue:
        v = queue.popleft()
        removed.add(v)
        for u in graph.neighbors(v):
            if u not in removed:
                degree[u] -= 1
                if degree[u] == 1:
                    queue.append(u)

    on_cycle = [v for v in graph.vertices if v not in removed]
    start = on_cycle[0]
    members = set(on_cycle)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = next(u for u in graph.neighbors(cur) if u in members and u != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def split_pseudo_tree(graph: Graph) -> PseudoTreeParts:
    """Cycle plus stub-extended hanging trees of a pseudo-tree."""
    cycle = cycle_vertices(graph)
    on_cycle = set(cycle)
    hanging: dict[str, RootedTree | None] = {}
    for v in cycle:
        outside = [u for u in graph.neighbors(v) if u not in on_cycle]
        if not outside:
            hanging[v] = None
            continue
        members: set[str] = {v}
        for u in outside:
            members.update(directed_component(graph, v, u))
        stub = _fresh_name(graph, v)
        vertices = [stub] + [x for x in graph.vertices if x in members]
        edges = [(stub, v)] + [(a, b) for a, b in graph.edges if a in members and b in members]
        hanging[v] = RootedTree(build_graph(edges, vertices=vertices), stub)
    return PseudoTreeParts(cycle=cycle, hanging=hanging)
