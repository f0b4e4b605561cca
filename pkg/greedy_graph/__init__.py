"""Graph core: parsing, degree-2 suppression, decomposition and root finding."""

from .graph import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    Graph,
    GraphError,
    GraphKind,
    GraphParseError,
    MalformedLineError,
    NotATreeError,
    SelfLoopError,
    TooManyCyclesError,
    VertexNotFoundError,
    build_graph,
    cycle_graph,
    parse_graph,
    path_graph,
    serialize_graph,
    star_graph,
)
from .suppress import suppress_degree2
from .decompose import (
    PseudoTreeParts,
    RootedTree,
    RootNotLeafError,
    cycle_vertices,
    decompose_at,
    directed_component,
    glue,
    split_pseudo_tree,
)
# roots depends on opening_angles.tree_types, keep it last
from .roots import NoSuchRoot, directed_types, find_all_open_root, open_roots

__all__ = [
    "DisconnectedGraphError",
    "DuplicateEdgeError",
    "Graph",
    "GraphError",
    "GraphKind",
    "GraphParseError",
    "MalformedLineError",
    "NotATreeError",
    "SelfLoopError",
    "TooManyCyclesError",
    "VertexNotFoundError",
    "build_graph",
    "cycle_graph",
    "parse_graph",
    "path_graph",
    "serialize_graph",
    "star_graph",
    "suppress_degree2",
    "PseudoTreeParts",
    "RootedTree",
    "RootNotLeafError",
    "cycle_vertices",
    "decompose_at",
    "directed_component",
    "glue",
    "split_pseudo_tree",
    "NoSuchRoot",
    "directed_types",
    "find_all_open_root",
    "open_roots",
]
