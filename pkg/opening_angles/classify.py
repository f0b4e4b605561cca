"""Classification of rooted trees and exact opening-angle suprema.

    classify_rooted() walks the rooted tree bottom-up with combine_child_types;
    degree-2 vertices pass their child's type through, so suppressed and
    unsuppressed trees classify identically. opening_angle_sup() turns a type
    into its exact supremum in degrees. canonical_rooted_tree() builds the
    smallest rooted tree of a given type, which is how table rows become
    concrete trees.

    To test this module run: uv run -m opening_angles.classify
"""

from fractions import Fraction

from greedy_graph.decompose import RootedTree
from greedy_graph.graph import build_graph

from .angles import ExactAngle
from .tree_types import TreeType, TreeVariant, combine_child_types


def classify_rooted(rt: RootedTree) -> TreeType:
    """Type of a rooted tree (its root stub has degree 1, checked by RootedTree).

    Args:
        rt: Rooted tree, with or without degree-2 vertices

    Returns:
        The matching TreeType, NoOpenAngle when no pattern applies
    """
    tree = rt.tree
    # iterative post-order from the child of the root
    parent = {rt.child: rt.root}
    order = [rt.child]
    for v in order:
        for u in tree.neighbors(v):
            if u != parent[v]:
                parent[u] = v
                order.append(u)

    below: dict[str, TreeType] = {}
    for v in reversed(order):
        below[v] = combine_child_types(below[u] for u in tree.neighbors(v) if u != parent[v])
    return below[rt.child]


def opening_angle_sup(tt: TreeType) -> ExactAngle:
    """Exact supremum of opening angles of a tree of type tt.

    A       -> 180 (attained)
    B_n     -> 90 + 60/2^n
    C_{0,n} -> 120/2^n
    C_{k,n} -> (90 + 60/2^k)/2^n            for k >= 1
    D_{k,l,n} -> (60/2^k + 60/2^l)/2^n
    E_{k,l,n} -> (45/2^k + 30/2^l)/2^n
    NoOpenAngle -> non-positive
    """
    half = Fraction(1, 2)
    k, l, n = tt.k, tt.l, tt.n
    match tt.variant:
        case TreeVariant.A:
            return ExactAngle.of(180)
        case TreeVariant.B:
            value = 90 + 60 * half**n
        case TreeVariant.C:
            base = Fraction(120) if k == 0 else 90 + 60 * half**k
            value = base * half**n
        case TreeVariant.D:
            value = (60 * half**k + 60 * half**l) * half**n
        case TreeVariant.E:
            value = (45 * half**k + 30 * half**l) * half**n
        case _:
            return ExactAngle.non_positive()
    return ExactAngle(value=Fraction(value), attained=False)


def rooted_angle(rt: RootedTree) -> ExactAngle:
    """Shortcut: opening_angle_sup(classify_rooted(rt))."""
    return opening_angle_sup(classify_rooted(rt))


class _TreeBuilder:
    """Accumulates edges with generated vertex names v0, v1, ..."""

    def __init__(self, prefix: str):
        self.prefix = prefix
        self.count = 0
        self.edges: list[tuple[str, str]] = []

    def new(self) -> str:
        name = f"{self.prefix}{self.count}"
        self.count += 1
        return name

    def leaf(self, parent: str) -> None:
        self.edges.append((parent, self.new()))

    def attach(self, parent: str, tt: TreeType) -> None:
        """Hang a subtree of type tt below `parent` (parent plays the root stub)."""
        v = self.new()
        self.edges.append((parent, v))
        match tt.variant:
            case TreeVariant.A:
                return
            case TreeVariant.B:
                self.leaf(v)
                if tt.n == 1:
                    self.leaf(v)
                else:
                    self.attach(v, TreeType.b(tt.n - 1))
            case TreeVariant.C:
                self.leaf(v)
                self.leaf(v)
                if tt.n > 1:
                    self.attach(v, tt.with_n(tt.n - 1))
                elif tt.k == 0:
                    self.leaf(v)
                else:
                    self.attach(v, TreeType.b(tt.k))
            case TreeVariant.D | TreeVariant.E:
                if tt.n > 0:
                    self.leaf(v)
                    self.leaf(v)
                    self.attach(v, tt.with_n(tt.n - 1))
                    return
                if tt.variant is TreeVariant.E:
                    self.leaf(v)
                self.attach(v, TreeType.b(tt.k))
                self.attach(v, TreeType.b(tt.l))
            case _:
                # smallest tree without an open angle: a degree-5 vertex below the stub
                for _ in range(4):
                    self.leaf(v)


def canonical_rooted_tree(tt: TreeType, prefix: str = "v") -> RootedTree:
    """Smallest rooted tree of type tt (no degree-2 vertices), rooted at '<prefix>root'.

    Args:
        tt: Target type; NoOpenAngle yields K_{1,5} rooted at a leaf
        prefix: Vertex-name prefix, so several canonical trees can be glued

    Returns:
        RootedTree whose classify_rooted() is tt
    """
    builder = _TreeBuilder(prefix)
    root = f"{prefix}root"
    builder.attach(root, tt)
    return RootedTree(build_graph(builder.edges), root)


if __name__ == "__main__":
    from .tree_types import parse_tree_type

    for text in ("A", "B_2", "C_{0,1}", "D_{1,2,0}", "E_{2,3,0}"):
        tt = parse_tree_type(text)
        rt = canonical_rooted_tree(tt)
        print(f"✅ {tt}: {len(rt.tree.vertices)} vertices, sup {opening_angle_sup(classify_rooted(rt))}")
