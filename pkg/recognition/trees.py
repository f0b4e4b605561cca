"""Tree recognition.

    Paths are always drawable. Otherwise a vertex of degree 6 or more rules the
    tree out, a tree without an all-open root is rejected with its closed 2-cycle,
    and the angle vector at the first all-open root decides the rest.
"""

import logging

from greedy_graph import (
    Graph,
    NoSuchRoot,
    NotATreeError,
    decompose_at,
    find_all_open_root,
)
from opening_angles import classify_rooted, opening_angle_sup

from .angle_vector import recognize_angle_vector
from .decision import AngleVector, Decision, Rule

logger = logging.getLogger(__name__)


def angle_vector_at(tree: Graph, root: str) -> tuple[AngleVector, tuple]:
    """Sorted suprema and the (unsorted) subtree types of the rooted subtrees at root."""
    types = tuple(classify_rooted(rt) for rt in decompose_at(tree, root))
    return AngleVector.of(opening_angle_sup(t) for t in types), types


def recognize_tree(tree: Graph) -> Decision:
    """Decide greedy-drawability of a tree.

    Args:
        tree: A tree (Graph of kind TREE)

    Returns:
        Decision; rule DegreeBound or ClosedPair for structural rejections

    Raises:
        NotATreeError: The input is not a tree
    """
    if not tree.is_tree:
        raise NotATreeError(f"recognize_tree needs a tree, got {tree.kind.value}")

    if len(tree) <= 2 or tree.max_degree <= 2:
        return Decision(True, Rule.ANGLE_SUM, {"reason": "path"})

    worst = max(tree.vertices, key=tree.degree)
    if tree.degree(worst) >= 6:
        logger.debug(f"Vertex {worst} has degree {tree.degree(worst)}: not drawable")
        return Decision(False, Rule.DEGREE_BOUND, {"vertex": worst, "degree": tree.degree(worst)})

    root = find_all_open_root(tree)
    if isinstance(root, NoSuchRoot):
        return Decision(False, Rule.CLOSED_PAIR, {"cycle": list(root.cycle)})

    vector, types = angle_vector_at(tree, root)
    decision = recognize_angle_vector(vector)
    return Decision(
        decision.drawable,
        decision.rule,
        decision.witness,
        angles=vector,
        root=root,
        subtree_types=types,
    )
