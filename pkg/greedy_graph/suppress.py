"""Degree-2 suppression.

    Subdividing an edge does not change the supremum of opening angles, so
    classification works on trees without degree-2 vertices. suppress_degree2
    contracts every maximal chain of degree-2 vertices into a single edge
    between its two surviving endpoints.
"""

from collections.abc import Iterable

from .graph import Graph, GraphKind, NotATreeError, build_graph


def suppress_degree2(graph: Graph, keep: Iterable[str] = ()) -> tuple[Graph, dict[str, str]]:
    """Contract degree-2 vertices of a tree.

    Args:
        graph: A tree
        keep: Vertices that must survive even if they have degree 2 (e.g. a root stub)

    Returns:
        (suppressed tree, mapping original vertex -> surviving representative).
        A contracted vertex maps to whichever endpoint of its chain comes first
        in the original vertex order.
    """
    if graph.kind is not GraphKind.TREE:
        raise NotATreeError(f"suppress_degree2 needs a tree, got {graph.kind.value}")

    kept = set(keep)
    survivors = [v for v in graph.vertices if graph.degree(v) != 2 or v in kept]
    survivor_set = set(survivors)
    mapping = {v: v for v in survivors}

    new_edges: list[tuple[str, str]] = []
    seen: set[frozenset[str]] = set()
    for s in survivors:
        for first in graph.neighbors(s):
            prev, cur = s, first
            chain: list[str] = []
            while cur not in survivor_set:
                chain.append(cur)
                a, b = graph.neighbors(cur)
                prev, cur = cur, (b if a == prev else a)
            key = frozenset((s, cur))
            if key in seen:
                continue
            seen.add(key)
            new_edges.append((s, cur))
            rep = s if graph.index(s) < graph.index(cur) else cur
            for v in chain:
                mapping[v] = rep

    return build_graph(new_edges, vertices=survivors), mapping
