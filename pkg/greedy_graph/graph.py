"""Graph representation and edge-list parsing.

    Graphs are immutable records of vertex names (first-appearance order) and
    undirected edges. parse_graph reads the whitespace-separated edge-list
    format, rejects self-loops, parallel edges, disconnected input and inputs
    with more than one independent cycle, and classifies what is left as a
    Tree or a PseudoTree.

    Edge-list format:
        # comment lines are ignored, so are blank lines
        a b
        b c

    To test this module run: uv run -m greedy_graph.graph
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import networkx as nx

logger = logging.getLogger(__name__)


class GraphError(Exception):
    """Base class for graph-core errors."""


class GraphParseError(GraphError):
    """The edge list could not be turned into a Tree or PseudoTree."""


class MalformedLineError(GraphParseError):
    """A non-comment line does not hold exactly two vertex names."""


class DuplicateEdgeError(GraphParseError):
    """The same unordered pair appears twice."""


class SelfLoopError(GraphParseError):
    """An edge joins a vertex to itself."""


class DisconnectedGraphError(GraphParseError):
    """The edges do not form a single connected component."""


class TooManyCyclesError(GraphParseError):
    """More edges than vertices: the graph has more than one independent cycle."""


class VertexNotFoundError(GraphError):
    """A vertex name that is not part of the graph."""


class NotATreeError(GraphError):
    """An operation that needs a tree (or pseudo-tree) was given something else."""


class GraphKind(Enum):
    """Classification of a connected input graph."""
    TREE = "tree"
    PSEUDO_TREE = "pseudo_tree"
    OTHER = "other"


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph with deterministic vertex and edge order."""
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    kind: GraphKind

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """Frozen networkx view, built once per graph."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return nx.freeze(g)

    @cached_property
    def _adjacency(self) -> dict[str, tuple[str, ...]]:
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(ns) for v, ns in adj.items()}

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        """Position of v in first-appearance order."""
        try:
            return self._index[v]
        except KeyError:
            raise VertexNotFoundError(f"vertex '{v}' is not in the graph") from None

    def neighbors(self, v: str) -> tuple[str, ...]:
        """Neighbors of v in edge order."""
        if v not in self._adjacency:
            raise VertexNotFoundError(f"vertex '{v}' is not in the graph")
        return self._adjacency[v]

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    @property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adjacency.values()), default=0)

    @property
    def is_tree(self) -> bool:
        return self.kind is GraphKind.TREE

    @property
    def is_pseudo_tree(self) -> bool:
        return self.kind is GraphKind.PSEUDO_TREE

    def edge_set(self) -> set[frozenset[str]]:
        return {frozenset(e) for e in self.edges}


def build_graph(
    edges: Iterable[tuple[str, str]],
    vertices: Iterable[str] | None = None,
    allow_general: bool = False,
) -> Graph:
    """Build and classify a graph from an edge sequence.

    Args:
        edges: Unordered vertex pairs
        vertices: Optional explicit vertex order (defaults to first appearance)
        allow_general: If True, connected graphs with several cycles get kind OTHER
            instead of raising TooManyCyclesError

    Returns:
        Graph with kind classified

    Raises:
        SelfLoopError, DuplicateEdgeError, DisconnectedGraphError, TooManyCyclesError
    """
    order: dict[str, None] = dict.fromkeys(vertices or ())
    seen: set[frozenset[str]] = set()
    kept: list[tuple[str, str]] = []
    for u, v in edges:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex '{u}'")
        key = frozenset((u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge '{u} {v}'")
        seen.add(key)
        order.setdefault(u)
        order.setdefault(v)
        kept.append((u, v))

    names = tuple(order)
    if not names:
        raise GraphParseError("graph has no vertices")
    graph = Graph(vertices=names, edges=tuple(kept), kind=GraphKind.OTHER)
    if not nx.is_connected(graph.nx_graph):
        components = nx.number_connected_components(graph.nx_graph)
        raise DisconnectedGraphError(f"graph has {components} connected components")

    n, m = len(names), len(kept)
    if m == n - 1:
        kind = GraphKind.TREE
    elif m == n:
        kind = GraphKind.PSEUDO_TREE
    elif allow_general:
        kind = GraphKind.OTHER
    else:
        raise TooManyCyclesError(f"{m} edges on {n} vertices: more than one cycle")
    return Graph(vertices=names, edges=tuple(kept), kind=kind)


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document into a Tree or PseudoTree.

    Args:
        text: One edge per line as two whitespace-separated vertex names;
            blank lines and lines starting with '#' are ignored

    Returns:
        Graph with vertices in first-appearance order

    Raises:
        MalformedLineError: A line without exactly two names
        SelfLoopError, DuplicateEdgeError, DisconnectedGraphError, TooManyCyclesError
    """
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLineError(f"line {lineno}: expected two vertex names, got {len(tokens)}")
        edges.append((tokens[0], tokens[1]))

    graph = build_graph(edges)
    logger.debug(f"Parsed {graph.kind.value} with {len(graph.vertices)} vertices and {len(graph.edges)} edges")
    return graph


def serialize_graph(graph: Graph) -> str:
    """Canonical edge-list text: one 'u v' line per edge, in edge order."""
    return "".join(f"{u} {v}\n" for u, v in graph.edges)


def star_graph(leaves: int, center: str = "r") -> Graph:
    """K_{1,leaves} with leaves named l0, l1, ..."""
    return build_graph((center, f"l{i}") for i in range(leaves))


def path_graph(length: int) -> Graph:
    """Path with `length` edges on vertices p0..p<length>."""
    return build_graph((f"p{i}", f"p{i + 1}") for i in range(length))


def cycle_graph(m: int) -> Graph:
    """Bare cycle C_m on vertices c0..c<m-1>."""
    return build_graph((f"c{i}", f"c{(i + 1) % m}") for i in range(m))


if __name__ == "__main__":
    sample = "a b\nb c\nc a\na d\nb e\ne f"
    g = parse_graph(sample)
    print(f"✅ {g.kind.value}: vertices={g.vertices}")
    print(serialize_graph(g), end="")
