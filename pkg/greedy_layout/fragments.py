"""Shrunken drawings of rooted subtrees with a prescribed opening angle.

    A fragment is drawn in local coordinates with its top vertex v at the
    origin; its arc is the smallest arc holding every parent -> child edge
    direction inside it, so the opening angle is 180 minus the arc width and
    the cone bisector points away from the arc's middle. Every point x with
    x - v inside the cone lies in the fragment's polytope, which is what lets
    siblings, parents and the rest of a drawing sit anywhere in that cone.

    A vertex with two or three children places them by the rules below
    (w = arc width of a placed child, e = 90 - w, o = 180 - w, eta the
    per-vertex angle budget, path children carry their tail collinearly):

        A, A        paths at +-(30 + eta)
        A, A, A     paths at -(60 + eta), 0, 60 + eta
        A, B        B's arc starts at 0, its edge along 0; path at 90 - e/2 + eta
        A, C/D/E    C/D/E's arc starts at 0, edge at w - 90 + eta; short path at w + 2 eta
        A, A, X     X centered on 0; paths at +-(45 + w/4 + eta)
        B, B        arcs end at -eta and start at eta, edges at -45 and 45
        A, B, B     the B with the larger e hangs below, the other along 0, path above

    Branching children are scaled into a disk of radius kappa * sin(eta) times
    the shortest sibling edge; degree-2 chains keep their child's size.
    draw_subtree verifies every fragment and halves kappa (greedy failure) or
    eta (opening shortfall) before giving up.

    To test this module run: uv run -m greedy_layout.fragments
"""

import logging
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from greedy_graph import RootedTree, directed_types
from greedy_verify import check_greedy_pairwise, measure_opening_angle
from opening_angles import TreeType, TreeVariant, canonical_rooted_tree, classify_rooted, opening_angle_sup, type_sort_key
from settings import CONFIG

from .drawing import ConeOverlay, ConstructionError, Drawing, LayoutError, OpeningTooLargeError
from .geometry import Point, add, arc_of, cosd, direction, mpf_of, norm, origin, rotate, scaled, sind, unit

logger = logging.getLogger(__name__)

START_KAPPA = Fraction(1, 2)
MAX_ETA = Fraction(15)


@dataclass(frozen=True)
class Fragment:
    """A drawn rooted subtree in local coordinates, top vertex at the origin."""
    root: str
    coords: dict[str, Point]
    edges: tuple[tuple[str, str], ...]
    arc: tuple[mpmath.mpf, mpmath.mpf] | None
    depth: int = 0

    @classmethod
    def of(cls, root: str, coords: dict[str, Point], edges, depth: int = 0) -> "Fragment":
        edges = tuple(edges)
        arc = arc_of(direction(coords[p], coords[c]) for p, c in edges)
        return cls(root, coords, edges, arc, depth)

    @property
    def width(self) -> mpmath.mpf:
        return mpmath.mpf(0) if self.arc is None else self.arc[1] - self.arc[0]

    @property
    def opening(self) -> mpmath.mpf:
        return 180 - self.width

    @property
    def cone_bisector(self) -> mpmath.mpf:
        if self.arc is None:
            return mpmath.mpf(180)
        return (self.arc[0] + self.arc[1]) / 2 + 180

    def radius(self) -> mpmath.mpf:
        return max((norm(p) for p in self.coords.values()), default=mpmath.mpf(0))


@dataclass(frozen=True)
class _Placement:
    fragment: Fragment
    length: mpmath.mpf
    heading: mpmath.mpf
    rotation: mpmath.mpf
    factor: mpmath.mpf


def _shrink(fragment: Fragment, rho) -> mpmath.mpf:
    radius = fragment.radius()
    return rho / radius if radius > 0 else mpmath.mpf(1)


class _FragmentBuilder:
    """Recursive construction of one rooted subtree for fixed eta and kappa."""

    def __init__(self, rt: RootedTree, eta, kappa):
        self.rt = rt
        self.types = directed_types(rt.tree)
        self.eta = mpf_of(eta)
        self.kappa = mpf_of(kappa)

    def children(self, v: str, parent: str) -> list[str]:
        return [u for u in self.rt.tree.neighbors(v) if u != parent]

    def build(self, v: str, parent: str) -> Fragment:
        if self.types[(parent, v)].variant is TreeVariant.A:
            return self._path(v, parent)

        chain = [v]
        prev = parent
        kids = self.children(v, parent)
        while len(kids) == 1:
            prev, cur = chain[-1], kids[0]
            chain.append(cur)
            kids = self.children(cur, prev)
        if len(chain) == 1:
            return self._branch(v, parent)

        below = self._branch(chain[-1], chain[-2])
        turn = -(below.arc[0] + below.arc[1]) / 2
        k = len(chain) - 1
        coords = {x: (mpmath.mpf(j), mpmath.mpf(0)) for j, x in enumerate(chain[:-1])}
        for name, p in below.coords.items():
            coords[name] = add((mpmath.mpf(k), mpmath.mpf(0)), rotate(p, turn))
        edges = list(zip(chain, chain[1:])) + list(below.edges)
        return Fragment.of(v, coords, edges, below.depth)

    def _path(self, v: str, parent: str) -> Fragment:
        path = [v]
        prev = parent
        kids = self.children(v, parent)
        while kids:
            prev, cur = path[-1], kids[0]
            path.append(cur)
            kids = self.children(cur, prev)
        k = len(path) - 1
        coords = {x: (mpmath.mpf(j) / k if k else mpmath.mpf(0), mpmath.mpf(0)) for j, x in enumerate(path)}
        return Fragment.of(v, coords, zip(path, path[1:]))

    def _branch(self, v: str, parent: str) -> Fragment:
        kids = self.children(v, parent)
        typed = sorted(((self.types[(v, c)], c) for c in kids), key=lambda tc: type_sort_key(tc[0]))
        fragments = [self.build(c, v) for _, c in typed]
        variants = tuple(t.variant for t, _ in typed)

        match variants:
            case (TreeVariant.A, TreeVariant.A):
                placements = self._two_paths(*fragments)
            case (TreeVariant.A, TreeVariant.A, TreeVariant.A):
                placements = self._three_paths(*fragments)
            case (TreeVariant.A, TreeVariant.B):
                placements = self._path_and_b(*fragments)
            case (TreeVariant.A, TreeVariant.C | TreeVariant.D | TreeVariant.E):
                placements = self._path_and_narrow(*fragments)
            case (TreeVariant.A, TreeVariant.A, _) if variants[2] is not TreeVariant.NO_OPEN_ANGLE:
                placements = self._two_paths_and(*fragments)
            case (TreeVariant.B, TreeVariant.B):
                placements = self._two_b(*fragments)
            case (TreeVariant.A, TreeVariant.B, TreeVariant.B):
                placements = self._path_and_two_b(*fragments)
            case _:
                raise LayoutError(
                    f"no construction below '{v}' for children {', '.join(str(t) for t, _ in typed)}"
                )
        return self._combine(v, placements, 1 + max(f.depth for f in fragments))

    def _combine(self, v: str, placements: list[_Placement], depth: int) -> Fragment:
        coords = {v: origin()}
        edges: list[tuple[str, str]] = []
        for pl in placements:
            at = scaled(unit(pl.heading), pl.length)
            for name, p in pl.fragment.coords.items():
                coords[name] = add(at, rotate(scaled(p, pl.factor), pl.rotation))
            edges.append((v, pl.fragment.root))
            edges.extend(pl.fragment.edges)
        return Fragment.of(v, coords, edges, depth)

    def _path_at(self, fragment: Fragment, length, heading, rho) -> _Placement:
        heading = mpf_of(heading)
        return _Placement(fragment, mpf_of(length), heading, heading, _shrink(fragment, rho))

    # ============================================================================
    # PLACEMENT RULES
    # ============================================================================

    def _two_paths(self, a0: Fragment, a1: Fragment) -> list[_Placement]:
        lam = 30 + self.eta
        rho = self.kappa * sind(self.eta)
        return [self._path_at(a0, 1, lam, rho), self._path_at(a1, 1, -lam, rho)]

    def _three_paths(self, a0: Fragment, a1: Fragment, a2: Fragment) -> list[_Placement]:
        lam = 60 + self.eta
        rho = self.kappa * sind(self.eta)
        return [self._path_at(a0, 1, -lam, rho), self._path_at(a1, 1, 0, rho), self._path_at(a2, 1, lam, rho)]

    def _path_and_b(self, a: Fragment, x: Fragment) -> list[_Placement]:
        lo, hi = x.arc
        e = 90 - (hi - lo)
        eta = min(self.eta, e / 4)
        lam = 90 - e / 2 + eta
        m = mpmath.sqrt(2 * sind(e / 2 - eta) * min(sind(e) / cosd(e / 2 + eta), 1 / (2 * cosd(lam))))
        rho = self.kappa * sind(eta) * min(1, m)
        return [
            _Placement(x, mpmath.mpf(1), mpmath.mpf(0), -lo, _shrink(x, rho)),
            self._path_at(a, m, lam, rho),
        ]

    def _path_and_narrow(self, a: Fragment, x: Fragment) -> list[_Placement]:
        lo, hi = x.arc
        w = hi - lo
        eta = min(self.eta, (180 - w) / 4)
        m = sind(eta) / (2 * cosd(2 * eta))
        rho = self.kappa * sind(eta) * m
        return [
            _Placement(x, mpmath.mpf(1), w - 90 + eta, -lo, _shrink(x, rho)),
            self._path_at(a, m, w + 2 * eta, rho),
        ]

    def _two_paths_and(self, a0: Fragment, a1: Fragment, x: Fragment) -> list[_Placement]:
        lo, hi = x.arc
        w = hi - lo
        eta = min(self.eta, (180 - w) / 8)
        lam = 45 + w / 4 + eta
        m = mpmath.sqrt(2 * cosd(lam) * min(cosd(w / 2) / cosd(lam - w / 2), 1 / (2 * cosd(lam))))
        rho = self.kappa * sind(eta) * min(1, m)
        return [
            _Placement(x, mpmath.mpf(1), mpmath.mpf(0), -(lo + hi) / 2, _shrink(x, rho)),
            self._path_at(a0, m, lam, rho),
            self._path_at(a1, m, -lam, rho),
        ]

    def _two_b(self, x: Fragment, y: Fragment) -> list[_Placement]:
        eta = min(self.eta, (x.opening + y.opening - 180) / 4)
        rho = self.kappa * sind(eta)
        return [
            _Placement(x, mpmath.mpf(1), mpmath.mpf(-45), -eta - x.arc[1], _shrink(x, rho)),
            _Placement(y, mpmath.mpf(1), mpmath.mpf(45), eta - y.arc[0], _shrink(y, rho)),
        ]

    def _path_and_two_b(self, a: Fragment, b0: Fragment, b1: Fragment) -> list[_Placement]:
        # x is the B child with the wider opening
        x, y = (b0, b1) if b0.opening >= b1.opening else (b1, b0)
        p = (90 - x.width) / 2
        q = (90 - y.width) / 2
        eta = min(self.eta, p / 4, q / 4)
        kappa_x = sind(eta) / (2 * sind(2 * p))
        length_x = (1 - kappa_x) / (2 * sind(p))
        lam = 90 - p / 2 - q + eta
        h = -p + eta + y.width
        m = mpmath.sqrt(2 * cosd(lam) * min(cosd(h) / cosd(lam - h), 1 / (2 * cosd(lam))))
        rho = self.kappa * sind(eta) * min(1, length_x, m)
        return [
            _Placement(y, mpmath.mpf(1), mpmath.mpf(0), -p + eta - y.arc[0], _shrink(y, rho)),
            _Placement(x, length_x, p - 90, -p - eta - x.arc[1], _shrink(x, rho)),
            self._path_at(a, m, lam, rho),
        ]


# ============================================================================
# SUBTREE DRAWING
# ============================================================================

def _parents(rt: RootedTree) -> dict[str, str]:
    parent = {rt.child: rt.root}
    order = [rt.child]
    for v in order:
        for u in rt.tree.neighbors(v):
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    return parent


def deficit_rate(rt: RootedTree) -> Fraction:
    """Rate c with opening >= sup - c * eta for a fragment of rt built with eta.

    Per rule, with D_x the children's own shortfall:

        A, A / A, A, A      2 eta
        A, B                D_x / 2 + eta
        A, C/D/E            D_x + 2 eta
        A, A, X             D_x / 2 + 2 eta
        B, B                D_x + D_y + 2 eta
        A, B, B             3 D_x / 4 + D_y / 2 + 2 eta (either B may be the wider)
    """
    parent = _parents(rt)
    types = directed_types(rt.tree)
    rate: dict[str, Fraction] = {}
    for v in reversed(list(parent)):
        typed = sorted(
            ((types[(v, c)], c) for c in rt.tree.neighbors(v) if c != parent[v]),
            key=lambda tc: type_sort_key(tc[0]),
        )
        below = [rate[c] for _, c in typed]
        match tuple(t.variant for t, _ in typed):
            case ():
                rate[v] = Fraction(0)
            case (_,):
                rate[v] = below[0]
            case (TreeVariant.A, TreeVariant.A) | (TreeVariant.A, TreeVariant.A, TreeVariant.A):
                rate[v] = Fraction(2)
            case (TreeVariant.A, TreeVariant.B):
                rate[v] = below[1] / 2 + 1
            case (TreeVariant.A, TreeVariant.C | TreeVariant.D | TreeVariant.E):
                rate[v] = below[1] + 2
            case (TreeVariant.B, TreeVariant.B):
                rate[v] = below[0] + below[1] + 2
            case (TreeVariant.A, TreeVariant.B, TreeVariant.B):
                rate[v] = Fraction(5, 4) * max(below[1], below[2]) + 2
            case (TreeVariant.A, TreeVariant.A, _):
                rate[v] = below[2] / 2 + 2
            case _:
                rate[v] = max(below, default=Fraction(0)) + 2
    return rate[rt.child]


def _budget(rt: RootedTree, sup: Fraction, opening) -> tuple[mpmath.mpf, int]:
    """Starting eta and the number of shrink levels of the rooted tree.

    eta spends slack_factor of the gap between the supremum and the requested
    opening at the tree's deficit rate; the rules cap it locally where a child
    leaves less room.
    """
    parent = _parents(rt)
    tree = rt.tree
    depth: dict[str, int] = {}
    for v in reversed(list(parent)):
        below = [depth[u] for u in tree.neighbors(v) if u != parent[v]]
        depth[v] = max(below, default=0) + (1 if tree.degree(v) >= 3 else 0)

    gap = min(mpf_of(sup) - mpf_of(opening), mpf_of(sup))
    rate = max(deficit_rate(rt), Fraction(2))
    eta = mpf_of(CONFIG["slack_factor"]) * gap / mpf_of(rate)
    return min(eta, mpf_of(MAX_ETA)), depth[rt.child]


def _precision_bits(depth: int, kappa, eta) -> int:
    base = CONFIG["layout_precision_bits"]
    if depth == 0:
        return max(mpmath.mp.prec, base)
    per_level = -math.log2(float(kappa) * math.sin(math.radians(float(eta))) ** 2) + 8
    return max(mpmath.mp.prec, base + math.ceil(depth * per_level))


def draw_subtree(subtree: TreeType | RootedTree, apex, bisector_direction, opening, scale) -> Drawing:
    """Greedy drawing of a rooted tree inside a disk, with a prescribed opening angle.

    Args:
        subtree: A TreeType (drawn on its canonical tree) or a RootedTree
        apex: Position of the rooted tree's top vertex (the stub's child)
        bisector_direction: Direction of the opening cone's bisector, degrees
        opening: Requested opening angle, below the type's supremum
        scale: Radius of the disk around apex holding the subtree

    Returns:
        Drawing of the rooted tree, stub included (placed on the bisector at
        distance scale), with the measured opening as its cone overlay

    Raises:
        OpeningTooLargeError: opening is not below the supremum (or above an attained 180)
        ConstructionError: Verification kept failing after max_retries attempts
    """
    rt = canonical_rooted_tree(subtree) if isinstance(subtree, TreeType) else subtree
    tt = subtree if isinstance(subtree, TreeType) else classify_rooted(rt)
    sup = opening_angle_sup(tt)
    wanted = mpf_of(opening)
    limit = mpf_of(sup.value)
    if not sup.is_positive or wanted > limit or (wanted == limit and not sup.attained):
        raise OpeningTooLargeError(f"opening {mpmath.nstr(wanted, 10)} is not below the supremum {sup} of {tt}")
    if mpf_of(scale) <= 0:
        raise LayoutError(f"scale must be positive, got {scale}")

    eta, depth = _budget(rt, sup.value, wanted)
    kappa = mpf_of(START_KAPPA)
    top = tuple(apex)
    bisector = mpf_of(bisector_direction)
    shrunk = frozenset(v for v in rt.tree.vertices if v != rt.root)

    for attempt in range(1, CONFIG["max_retries"] + 1):
        bits = _precision_bits(depth, kappa, eta)
        with mpmath.workprec(bits):
            apex = (mpf_of(top[0]), mpf_of(top[1]))
            fragment = _FragmentBuilder(rt, eta, kappa).build(rt.child, rt.root)
            turn = bisector - fragment.cone_bisector
            factor = _shrink(fragment, mpf_of(scale))
            coords = {v: add(apex, rotate(scaled(p, factor), turn)) for v, p in fragment.coords.items()}
            coords[rt.root] = add(apex, scaled(unit(bisector), mpf_of(scale)))
        # the top vertex keeps the caller's point exactly
        coords[rt.child] = top
        candidate = Drawing(rt.tree, coords, shrunk=shrunk)
        report = check_greedy_pairwise(candidate, exact=True)
        measured = measure_opening_angle(candidate, (rt.root, rt.child))
        if report.passed and not measured.closed and measured.degrees >= float(wanted):
            logger.debug(
                f"Subtree below {rt.child} ({tt}): opening {measured.degrees:.6f} >= {float(wanted):.6f} "
                f"after {attempt} attempt(s)"
            )
            trace = {
                "strategy": "fragment",
                "vertex": rt.child,
                "type": str(tt),
                "opening": float(wanted),
                "measured": measured.degrees,
                "scale": float(scale),
                "eta": float(eta),
                "kappa": float(kappa),
                "attempts": attempt,
                "precision_bits": bits,
            }
            cone = ConeOverlay(rt.child, float(bisector % 360), measured.degrees)
            return Drawing(rt.tree, coords, (trace,), shrunk, (cone,), report)
        if not report.passed:
            kappa /= 2
        else:
            eta /= 2

    raise ConstructionError(
        f"subtree below '{rt.child}' ({tt}) failed verification after {CONFIG['max_retries']} attempts "
        f"(opening {float(wanted):.6f})"
    )


# ============================================================================
# HANGING SUBTREES ON A BASE DRAWING
# ============================================================================

@dataclass(frozen=True)
class Host:
    """A vertex of a base drawing that receives a rooted subtree.

    The wedge (bisector, width) is the angle at the vertex that must fit inside
    the subtree's opening cone; phi is the subtree's supremum.
    """
    subtree: RootedTree
    phi: Fraction
    bisector: mpmath.mpf
    width: mpmath.mpf


@dataclass(frozen=True)
class AttachedFragments:
    coords: dict[str, Point] = field(default_factory=dict)
    trace: tuple[dict, ...] = ()
    shrunk: frozenset[str] = frozenset()
    cones: tuple[ConeOverlay, ...] = ()


def _shortest_distance(base: Drawing) -> float:
    points = list(base.float_coords().values())
    return min(
        (math.dist(p, q) for i, p in enumerate(points) for q in points[i + 1:]),
        default=1.0,
    )


def attach_fragments(base: Drawing, hosts: Mapping[str, Host], kappa) -> AttachedFragments:
    """Draw every host's subtree at its vertex, inside the host's wedge.

    Each subtree asks for the opening (width + phi) / 2 around the wedge
    bisector; all of them share one scale: kappa times the smaller of the
    shortest base distance times sin of the tightest half-slack and half the
    base drawing's greedy margin.

    Raises:
        LayoutError: A wedge does not fit below its subtree's supremum, or the base is not greedy
        ConstructionError: A subtree could not be drawn
    """
    if not hosts:
        return AttachedFragments()
    slack = []
    for v, host in hosts.items():
        if host.subtree.child != v:
            raise LayoutError(f"host '{v}' carries a subtree rooted below '{host.subtree.child}'")
        if mpf_of(host.phi) <= host.width:
            raise LayoutError(f"wedge {float(host.width):.6f} at '{v}' does not fit below {float(host.phi)}")
        slack.append((mpf_of(host.phi) - host.width) / 4)

    margin = check_greedy_pairwise(base, exact=True).min_margin
    if margin <= 0:
        raise LayoutError(f"base drawing is not greedy (margin {margin:.3e})")
    shortest = _shortest_distance(base)
    reach = shortest * float(sind(min(slack)))
    if not math.isinf(margin):
        reach = min(reach, margin / 2)
    scale = mpf_of(kappa) * mpf_of(reach)

    coords: dict[str, Point] = {}
    trace: list[dict] = []
    shrunk: set[str] = set()
    cones: list[ConeOverlay] = []
    for v, host in hosts.items():
        opening = (host.width + mpf_of(host.phi)) / 2
        part = draw_subtree(host.subtree, base.coords[v], host.bisector, opening, scale)
        for name, p in part.coords.items():
            if name != host.subtree.root:
                coords[name] = p
        trace.extend(part.trace)
        shrunk.update(part.shrunk)
        cones.extend(part.cones)
    return AttachedFragments(coords, tuple(trace), frozenset(shrunk), tuple(cones))


if __name__ == "__main__":
    from opening_angles import parse_tree_type

    logging.basicConfig(level=logging.INFO, format="%(levelname)-8s %(message)s")
    for text, opening in (("A", 179), ("B_1", 119), ("B_2", 104), ("D_{1,1,0}", 59), ("E_{1,1,0}", 37)):
        dr = draw_subtree(parse_tree_type(text), (0, 0), 180, opening, 1)
        logger.info(f"✅ {text}: {len(dr.coords)} points, measured {dr.cones[0].opening:.4f} >= {opening}")
