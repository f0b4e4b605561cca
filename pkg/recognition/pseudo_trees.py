"""Pseudo-tree recognition.

    A pseudo-tree with cycle v_0..v_{m-1} is drawable iff the positive suprema
    of its stub-extended hanging trees sum to more than 180 * (m - 2). Bare cycle
    vertices contribute 180; hanging trees without an open angle contribute 0,
    and two of them already make the inequality impossible.
"""

from fractions import Fraction

from greedy_graph import Graph, NotATreeError, split_pseudo_tree
from opening_angles import ExactAngle, TreeType, classify_rooted, opening_angle_sup

from .decision import Decision, Rule


def cycle_angles(pseudo_tree: Graph) -> tuple[tuple[str, ...], dict[str, ExactAngle], dict[str, TreeType]]:
    """(cycle, phi per cycle vertex, hanging-tree type per cycle vertex)."""
    parts = split_pseudo_tree(pseudo_tree)
    phis: dict[str, ExactAngle] = {}
    types: dict[str, TreeType] = {}
    for v in parts.cycle:
        rt = parts.hanging[v]
        tt = TreeType.a() if rt is None else classify_rooted(rt)
        types[v] = tt
        phis[v] = opening_angle_sup(tt)
    return parts.cycle, phis, types


def recognize_pseudo_tree(pseudo_tree: Graph) -> Decision:
    """Decide greedy-drawability of a graph with exactly one cycle.

    Raises:
        NotATreeError: The input is not a pseudo-tree
    """
    if not pseudo_tree.is_pseudo_tree:
        raise NotATreeError(f"recognize_pseudo_tree needs a pseudo-tree, got {pseudo_tree.kind.value}")

    cycle, phis, types = cycle_angles(pseudo_tree)
    m = len(cycle)
    closed = [v for v in cycle if not phis[v].is_positive]
    total = sum((phis[v].value for v in cycle if phis[v].is_positive), Fraction(0))
    bound = Fraction(180 * (m - 2))
    witness = {
        "cycle": list(cycle),
        "angles": {v: phis[v].value for v in cycle},
        "sum": total,
        "bound": bound,
    }
    if len(closed) >= 2:
        witness["non_positive"] = closed
        return Decision(False, Rule.CYCLE_ANGLE_SUM, witness, subtree_types=tuple(types[v] for v in cycle))
    return Decision(total > bound, Rule.CYCLE_ANGLE_SUM, witness, subtree_types=tuple(types[v] for v in cycle))
