"""The taxonomy of rooted trees that can be drawn with an open angle.

    A rooted tree with a degree-1 root is of type A, B_n, C_{k,n}, D_{k,l,n},
    E_{k,l,n}, or it has no open angle at all. The type of the subtree hanging
    below a vertex depends only on the multiset of the types hanging below its
    children, so classification is one bottom-up pass with combine_child_types:

        no children             -> A
        one child X             -> X            (subdivision vertex)
        {A, A}                  -> B_1
        {A, B_n}                -> B_{n+1}
        {A, A, A}               -> C_{0,1}
        {A, A, B_k}             -> C_{k,1}
        {A, A, C_{k,n}}         -> C_{k,n+1}
        {A, C_{k,n}}            -> C_{k,n}
        {B_k, B_l}              -> D_{k,l,0}
        {A, D_{k,l,n}}          -> D_{k,l,n}
        {A, A, D_{k,l,n}}       -> D_{k,l,n+1}
        {A, B_k, B_l}           -> E_{k,l,0}
        {A, E_{k,l,n}}          -> E_{k,l,n}
        {A, A, E_{k,l,n}}       -> E_{k,l,n+1}
        anything else           -> NoOpenAngle

    This module has no dependency on the graph package so root finding can use
    the combination rule directly.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from .angles import ClassificationError


class InvalidTreeTypeError(ClassificationError, ValueError):
    """TreeType parameters outside their allowed ranges."""


class TreeVariant(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    NO_OPEN_ANGLE = "NoOpenAngle"


@dataclass(frozen=True)
class TreeType:
    """A rooted-tree type with its parameters (unused ones are 0).

    D and E keep (k, l) sorted so that l >= k.
    """
    variant: TreeVariant
    k: int = 0
    l: int = 0
    n: int = 0

    def __post_init__(self):
        v, k, l, n = self.variant, self.k, self.l, self.n
        if min(k, l, n) < 0:
            raise InvalidTreeTypeError(f"negative parameter in {self!r}")
        if v in (TreeVariant.A, TreeVariant.NO_OPEN_ANGLE) and (k or l or n):
            raise InvalidTreeTypeError(f"{v.value} takes no parameters")
        if v is TreeVariant.B and (n < 1 or k or l):
            raise InvalidTreeTypeError(f"B needs n >= 1 and nothing else, got n={n}")
        if v is TreeVariant.C and (n < 1 or l):
            raise InvalidTreeTypeError(f"C needs k >= 0, n >= 1, got k={k} n={n}")
        if v in (TreeVariant.D, TreeVariant.E):
            if k < 1 or l < k:
                raise InvalidTreeTypeError(f"{v.value} needs 1 <= k <= l, got k={k} l={l}")

    @classmethod
    def a(cls) -> "TreeType":
        return cls(TreeVariant.A)

    @classmethod
    def b(cls, n: int) -> "TreeType":
        return cls(TreeVariant.B, n=n)

    @classmethod
    def c(cls, k: int, n: int) -> "TreeType":
        return cls(TreeVariant.C, k=k, n=n)

    @classmethod
    def d(cls, k: int, l: int, n: int) -> "TreeType":
        k, l = sorted((k, l))
        return cls(TreeVariant.D, k=k, l=l, n=n)

    @classmethod
    def e(cls, k: int, l: int, n: int) -> "TreeType":
        k, l = sorted((k, l))
        return cls(TreeVariant.E, k=k, l=l, n=n)

    @classmethod
    def no_open_angle(cls) -> "TreeType":
        return cls(TreeVariant.NO_OPEN_ANGLE)

    @property
    def is_open(self) -> bool:
        return self.variant is not TreeVariant.NO_OPEN_ANGLE

    def with_n(self, n: int) -> "TreeType":
        return TreeType(self.variant, k=self.k, l=self.l, n=n)

    def __str__(self) -> str:
        match self.variant:
            case TreeVariant.A:
                return "A"
            case TreeVariant.B:
                return f"B_{self.n}"
            case TreeVariant.C:
                return f"C_{{{self.k},{self.n}}}"
            case TreeVariant.D | TreeVariant.E:
                return f"{self.variant.value}_{{{self.k},{self.l},{self.n}}}"
            case _:
                return "NoOpenAngle"


def parse_tree_type(text: str) -> TreeType:
    """Read 'A', 'B2', 'B_2', 'C_{0,1}', 'D1,2,0', 'E_{1,1,0}' or 'NoOpenAngle'."""
    cleaned = text.strip().replace("_", "").replace("{", "").replace("}", "").replace(" ", "")
    if cleaned.lower() in ("noopenangle", "none"):
        return TreeType.no_open_angle()
    if not cleaned:
        raise InvalidTreeTypeError("empty tree type")
    head, rest = cleaned[0].upper(), cleaned[1:]
    try:
        params = [int(p) for p in rest.split(",")] if rest else []
    except ValueError:
        raise InvalidTreeTypeError(f"cannot parse tree type '{text}'") from None
    builders = {"A": (TreeType.a, 0), "B": (TreeType.b, 1), "C": (TreeType.c, 2),
                "D": (TreeType.d, 3), "E": (TreeType.e, 3)}
    if head not in builders or len(params) != builders[head][1]:
        raise InvalidTreeTypeError(f"cannot parse tree type '{text}'")
    builder, _ = builders[head]
    return builder(*params)


_VARIANT_ORDER = {variant: i for i, variant in enumerate(TreeVariant)}


def type_sort_key(t: TreeType) -> tuple[int, int, int, int]:
    """Deterministic order: A, B, C, D, E, NoOpenAngle, then by parameters."""
    return (_VARIANT_ORDER[t.variant], t.k, t.l, t.n)


def combine_child_types(children: Iterable[TreeType]) -> TreeType:
    """Type of the subtree below a vertex, given the types below its children."""
    kids = sorted(children, key=type_sort_key)
    if any(not t.is_open for t in kids):
        return TreeType.no_open_angle()
    if not kids:
        return TreeType.a()
    if len(kids) == 1:
        return kids[0]
    if len(kids) > 3:
        return TreeType.no_open_angle()

    leaves = sum(1 for t in kids if t.variant is TreeVariant.A)
    others = [t for t in kids if t.variant is not TreeVariant.A]
    variants = tuple(t.variant for t in others)

    if len(kids) == 2:
        if leaves == 2:
            return TreeType.b(1)
        if leaves == 1:
            (x,) = others
            if x.variant is TreeVariant.B:
                return TreeType.b(x.n + 1)
            return x  # C, D and E pass a degree-3 vertex unchanged
        if variants == (TreeVariant.B, TreeVariant.B):
            return TreeType.d(others[0].n, others[1].n, 0)
        return TreeType.no_open_angle()

    # three children: a degree-4 vertex
    if leaves == 3:
        return TreeType.c(0, 1)
    if leaves == 2:
        (x,) = others
        match x.variant:
            case TreeVariant.B:
                return TreeType.c(x.n, 1)
            case TreeVariant.C | TreeVariant.D | TreeVariant.E:
                return x.with_n(x.n + 1)
        return TreeType.no_open_angle()
    if leaves == 1 and variants == (TreeVariant.B, TreeVariant.B):
        return TreeType.e(others[0].n, others[1].n, 0)
    return TreeType.no_open_angle()
