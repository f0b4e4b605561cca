"""Greedy drawings of pseudo-trees.

    The cycle is drawn as a convex polygon whose angle at every cycle vertex v
    stays below phi(v), the supremum of v's stub-extended hanging tree; the
    hanging trees are then drawn small inside the polygon's wedges. Three
    strategies are tried in order:

        inscribed       cycle on the unit circle; a linear program maximizes
                        the smallest slack between the polygon angles and phi
        corner-cluster  the vertices with phi < 180 span a tangential polygon
                        (a lens for two of them); the others sit on slightly
                        bulged arcs close to the corner they follow
        auxiliary-tree  one vertex a with phi = 0: a, b and c (the other
                        vertices with phi < 180, padded with a's cycle
                        neighbors) are drawn as a tree around a fresh hub, the
                        hub is removed and the cycle closes through a, b, c

    Each candidate is verified exactly; eps and kappa are halved between
    attempts and the next strategy starts when the retry budget is spent.

    To test this module run: uv run -m greedy_layout.pseudo_trees
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from certification import LinearProgram, solve_lp
from greedy_graph import Graph, NotATreeError, RootedTree, build_graph, split_pseudo_tree
from opening_angles import TreeType, classify_rooted, opening_angle_sup
from recognition import recognize_pseudo_tree
from settings import CONFIG

from .drawing import (
    ConstructionError,
    Drawing,
    LayoutError,
    NotDrawable,
    ThinDrawingError,
    is_thin,
    merge_coordinates,
    verify_construction,
)
from .fragments import START_KAPPA, Host, attach_fragments
from .geometry import Point, add, dist, mpf_of, norm, rotate, scaled, sind, sub, unit, wedge_at
from .trees import draw_tree

logger = logging.getLogger(__name__)


@dataclass
class _CycleLayout:
    """A pseudo-tree split into its cycle and hanging trees, with phi per cycle vertex (0 if not open)."""
    graph: Graph
    cycle: tuple[str, ...]
    hanging: dict[str, RootedTree | None]
    phi: dict[str, Fraction]
    auxiliary: Drawing | NotDrawable | None = field(default=None, repr=False)

    @property
    def m(self) -> int:
        return len(self.cycle)

    def position(self, v: str) -> int:
        return self.cycle.index(v)

    def cycle_graph(self) -> Graph:
        return build_graph(list(zip(self.cycle, self.cycle[1:] + self.cycle[:1])))


def _layout_of(graph: Graph) -> _CycleLayout:
    parts = split_pseudo_tree(graph)
    phi: dict[str, Fraction] = {}
    for v in parts.cycle:
        rt = parts.hanging[v]
        angle = opening_angle_sup(TreeType.a() if rt is None else classify_rooted(rt))
        phi[v] = angle.value if angle.is_positive else Fraction(0)
    return _CycleLayout(graph, parts.cycle, parts.hanging, phi)


# ============================================================================
# ARCS AND CHAINS
# ============================================================================

def _orientation(p: Point, q: Point, r: Point) -> mpmath.mpf:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _arc_point(p: Point, q: Point, psi, u, ccw: bool = True) -> Point:
    """Point at fraction u of the circular arc from p to q that leaves the chord at angle psi.

    The arc bulges to the right of p -> q for a counter-clockwise polygon
    (to the left for a clockwise one), i.e. away from the polygon's inside.
    """
    chord = sub(q, p)
    length = norm(chord)
    left = (-chord[1] / length, chord[0] / length)
    sign = 1 if ccw else -1
    mid = scaled(add(p, q), mpmath.mpf(1) / 2)
    center = add(mid, scaled(left, sign * length / 2 * mpmath.cot(mpmath.radians(mpf_of(psi)))))
    return add(center, rotate(sub(p, center), sign * 2 * mpf_of(psi) * mpf_of(u)))


def _place_chain(
    p: Point, q: Point, names: Sequence[str], psi, step, where: str, ccw: bool = True
) -> dict[str, Point]:
    """Chain vertices on the arc p -> q: packed after p ('start'), before q ('end') or evenly spread."""
    length = dist(p, q)
    n = len(names)
    placed = {}
    for i, name in enumerate(names, 1):
        if where == "start":
            u = i * step / length
        elif where == "end":
            u = 1 - (n + 1 - i) * step / length
        else:
            u = mpmath.mpf(i) / (n + 1)
        placed[name] = _arc_point(p, q, psi, u, ccw)
    return placed


def _between(cycle: Sequence[str], start: str, end: str) -> list[str]:
    """Cycle vertices strictly after start and before end, in cycle order."""
    m = len(cycle)
    i = cycle.index(start)
    out = []
    while True:
        i = (i + 1) % m
        if cycle[i] == end:
            return out
        out.append(cycle[i])


# ============================================================================
# HANGING TREES AND VERIFICATION
# ============================================================================

def _hang_and_verify(
    layout: _CycleLayout,
    base: Drawing,
    hosts_at: Sequence[str],
    kappa,
    trace: dict,
) -> Drawing | None:
    """Attach the hanging trees of hosts_at inside their cycle wedges and verify the pseudo-tree.

    Returns None when the pseudo-tree is not greedy.

    Raises:
        ThinDrawingError: Greedy, but the margin is below greedy_tolerance times the diameter
    """
    hosts: dict[str, Host] = {}
    with mpmath.workprec(CONFIG["layout_precision_bits"]):
        for v in hosts_at:
            rt = layout.hanging[v]
            if rt is None:
                continue
            i = layout.position(v)
            prev, nxt = layout.cycle[i - 1], layout.cycle[(i + 1) % layout.m]
            bisector, width = wedge_at(base.coords[v], base.coords[prev], base.coords[nxt])
            hosts[v] = Host(rt, layout.phi[v], bisector, width)

    attached = attach_fragments(base, hosts, kappa)
    coords = merge_coordinates(base.coords, attached.coords)
    drawing = Drawing(
        layout.graph,
        coords,
        ({**trace, "kappa": float(kappa)},) + base.trace + attached.trace,
        base.shrunk | attached.shrunk,
        base.cones + attached.cones,
    )
    report = verify_construction(drawing)
    if is_thin(report):
        raise ThinDrawingError(f"{trace['strategy']} margin {report.min_margin:.3e} is below {report.tolerance:.3e}")
    if not report.passed:
        logger.debug(f"{trace['strategy']} candidate failed: {report.summary()}")
        return None
    return drawing.with_report(report)


# ============================================================================
# STRATEGIES
# ============================================================================

class _NotApplicable(Exception):
    """The strategy cannot handle this pseudo-tree at all."""


def _inscribed(layout: _CycleLayout, eps: Fraction, kappa: Fraction) -> Drawing | None:
    m = layout.m
    phi = [layout.phi[v] for v in layout.cycle]
    if min(phi) <= 0:
        raise _NotApplicable("a hanging tree has no open angle")

    # variables: arcs c_0..c_{m-1} (c_i from v_i to v_{i+1}) and the slack delta
    rows = []
    for i in range(m):
        row = [0] * (m + 1)
        row[i], row[m] = -1, 1
        rows.append((row, 0))
        row = [0] * (m + 1)
        row[(i - 1) % m] -= 1
        row[i] -= 1
        row[m] = 2
        rows.append((row, -2 * (180 - phi[i])))
    rows.append(([0] * m + [1], 180))
    lp = LinearProgram.build(m + 1, [0] * m + [1], rows, [([1] * m + [0], 360)])
    result = solve_lp(lp)
    if not result.is_optimal or result.value <= 0:
        raise _NotApplicable("no inscribed polygon keeps every angle below phi")

    arcs = result.point[:m]
    with mpmath.workprec(CONFIG["layout_precision_bits"]):
        coords = {}
        heading = Fraction(0)
        for v, arc in zip(layout.cycle, arcs):
            coords[v] = unit(heading)
            heading += arc
    base = Drawing(layout.cycle_graph(), coords, ({"strategy": "cycle", "arcs": [str(a) for a in arcs]},))
    return _hang_and_verify(
        layout, base, layout.cycle, kappa, {"strategy": "inscribed", "slack": str(result.value)}
    )


def _corner_angles(phi: list[Fraction], eps: Fraction) -> list[Fraction]:
    """Polygon angles below phi summing to 180 (s - 2), the balance taken at the smallest phi."""
    s = len(phi)
    total = Fraction(180 * (s - 2))
    k = min(range(s), key=lambda i: phi[i])
    theta = [p - eps for p in phi]
    theta[k] = total - sum(theta[i] for i in range(s) if i != k)
    if all(0 < t < p for t, p in zip(theta, phi)):
        return theta
    return [p * total / sum(phi) for p in phi]


def _corner_cluster(layout: _CycleLayout, eps: Fraction, kappa: Fraction) -> Drawing | None:
    phi = layout.phi
    if any(phi[v] <= 0 for v in layout.cycle):
        raise _NotApplicable("a hanging tree has no open angle")
    corners = [v for v in layout.cycle if phi[v] < 180]
    s = len(corners)
    if s < 2:
        raise _NotApplicable(f"{s} corner(s)")

    with mpmath.workprec(CONFIG["layout_precision_bits"]):
        if s == 2:
            bulge = mpf_of(min(phi[v] for v in corners)) / 4
            coords = {corners[0]: (mpmath.mpf(0), mpmath.mpf(0)), corners[1]: (mpmath.mpf(1), mpmath.mpf(0))}
            angles = None
        else:
            angles = _corner_angles([phi[v] for v in corners], eps)
            bulge = mpf_of(min(eps, min(phi[v] - t for v, t in zip(corners, angles)))) / 10
            coords = {}
            normal = mpmath.mpf(0)
            for v, theta in zip(corners, angles):
                turn = 180 - mpf_of(theta)
                coords[v] = scaled(unit(normal + turn / 2), 1 / sind(mpf_of(theta) / 2))
                normal += turn

        shortest = min(dist(coords[corners[j]], coords[corners[(j + 1) % s]]) for j in range(s))
        for j, p in enumerate(corners):
            q = corners[(j + 1) % s]
            chain = _between(layout.cycle, p, q)
            if chain:
                step = mpf_of(Fraction(2, 5) * kappa) * shortest / (len(chain) + 1)
                coords.update(_place_chain(coords[p], coords[q], chain, bulge, step, "start"))

    trace = {"strategy": "corner-cluster", "corners": corners, "eps": str(eps), "bulge": float(bulge)}
    if angles is not None:
        trace["angles"] = [str(t) for t in angles]
    base = Drawing(layout.cycle_graph(), coords, ({"strategy": "cycle"},))
    return _hang_and_verify(layout, base, layout.cycle, kappa, trace)


def _fresh(graph: Graph, base: str) -> str:
    name = base
    while name in graph:
        name += "'"
    return name


def _hanging_edges(rt: RootedTree | None) -> list[tuple[str, str]]:
    if rt is None:
        return []
    return [(x, y) for x, y in rt.tree.edges if rt.root not in (x, y)]


def _auxiliary_tree(layout: _CycleLayout, eps: Fraction, kappa: Fraction) -> Drawing | None:
    cycle, phi, m = layout.cycle, layout.phi, layout.m
    closed = [v for v in cycle if phi[v] <= 0]
    if len(closed) != 1:
        raise _NotApplicable("needs exactly one hanging tree without an open angle")
    a = closed[0]
    i = layout.position(a)
    others = [v for v in cycle if v != a and phi[v] < 180]
    for v in (cycle[i - 1], cycle[(i + 1) % m]):
        if len(others) < 2 and v not in others:
            others.append(v)
    # b comes first after a in cycle order
    b, c = sorted(others, key=lambda v: (layout.position(v) - i) % m)

    hub = _fresh(layout.graph, "hub")
    edges = [(hub, a), (hub, b), (hub, c)]
    for v in (a, b, c):
        edges.extend(_hanging_edges(layout.hanging[v]))
    if layout.auxiliary is None:
        try:
            layout.auxiliary = draw_tree(build_graph(edges))
        except ConstructionError as e:
            raise _NotApplicable(f"auxiliary tree: {e}") from e
    auxiliary = layout.auxiliary
    if isinstance(auxiliary, NotDrawable):
        raise _NotApplicable(f"auxiliary tree rejected ({auxiliary.decision.rule.value})")

    with mpmath.workprec(CONFIG["layout_precision_bits"]):
        coords = {v: xy for v, xy in auxiliary.coords.items() if v != hub}
        pa, pb, pc = (tuple(mpf_of(x) for x in coords[v]) for v in (a, b, c))
        ccw = _orientation(pa, pb, pc) > 0
        xi = min(mpf_of(eps) / 10, mpmath.mpf(1))
        shortest = min(dist(pa, pb), dist(pb, pc), dist(pc, pa))
        spread = 120 * mpf_of(kappa)

        near_a = _between(cycle, a, b)
        if near_a:
            step = mpf_of(Fraction(2, 5) * kappa) * shortest / (len(near_a) + 1)
            coords.update(_place_chain(pa, pb, near_a, xi, step, "start", ccw))
        back_to_a = _between(cycle, c, a)
        if back_to_a:
            step = mpf_of(Fraction(2, 5) * kappa) * shortest / (len(back_to_a) + 1)
            coords.update(_place_chain(pc, pa, back_to_a, xi, step, "end", ccw))
        coords.update(_place_chain(pb, pc, _between(cycle, b, c), spread, None, "spread", ccw))

    base_edges = list(zip(cycle, cycle[1:] + cycle[:1]))
    for v in (a, b, c):
        base_edges.extend(_hanging_edges(layout.hanging[v]))
    base = Drawing(
        build_graph(base_edges),
        coords,
        ({"strategy": "auxiliary-tree-drawing", "hub": hub},) + auxiliary.trace,
        frozenset(v for v in auxiliary.shrunk if v != hub),
        tuple(cone for cone in auxiliary.cones if cone.vertex != hub),
    )
    chain_hosts = [v for v in cycle if v not in (a, b, c)]
    trace = {"strategy": "auxiliary-tree", "a": a, "b": b, "c": c, "eps": str(eps), "spread": float(spread)}
    return _hang_and_verify(layout, base, chain_hosts, kappa, trace)


STRATEGIES: dict[str, Callable[[_CycleLayout, Fraction, Fraction], Drawing | None]] = {
    "inscribed": _inscribed,
    "corner-cluster": _corner_cluster,
    "auxiliary-tree": _auxiliary_tree,
}


def draw_pseudo_tree(pseudo_tree: Graph) -> Drawing | NotDrawable:
    """Verified greedy drawing of a pseudo-tree, or NotDrawable with the recognizer's decision.

    Raises:
        NotATreeError: The input is not a pseudo-tree
        ConstructionError: Every strategy exhausted its retries
    """
    if not pseudo_tree.is_pseudo_tree:
        raise NotATreeError(f"draw_pseudo_tree needs a pseudo-tree, got {pseudo_tree.kind.value}")
    decision = recognize_pseudo_tree(pseudo_tree)
    if not decision.drawable:
        logger.info(f"❌ Pseudo-tree is not greedy-drawable (sum {decision.witness['sum']} <= {decision.witness['bound']})")
        return NotDrawable(decision)

    layout = _layout_of(pseudo_tree)
    excess = decision.witness["sum"] - decision.witness["bound"]
    start_eps = excess / (4 * layout.m)
    problems = []
    for name, strategy in STRATEGIES.items():
        eps, kappa = start_eps, Fraction(START_KAPPA)
        for attempt in range(1, CONFIG["max_retries"] + 1):
            try:
                drawing = strategy(layout, eps, kappa)
            except _NotApplicable as e:
                logger.debug(f"Strategy {name} does not apply: {e}")
                break
            except ThinDrawingError as e:
                logger.debug(f"Strategy {name}, attempt {attempt}: {e}")
                problems.append(f"{name}: {e}")
                break
            except LayoutError as e:
                logger.debug(f"Strategy {name}, attempt {attempt}: {e}")
                problems.append(f"{name}: {e}")
                drawing = None
            if drawing is not None:
                logger.info(f"✅ Drew pseudo-tree with cycle length {layout.m} ({name}): {drawing.report.summary()}")
                return drawing
            eps /= 2
            kappa /= 2
        else:
            logger.warning(f"⚠️ Strategy {name} exhausted {CONFIG['max_retries']} attempts")

    detail = f"; last problem: {problems[-1]}" if problems else ""
    raise ConstructionError(f"no verified drawing for the pseudo-tree with cycle {list(layout.cycle)}{detail}")


if __name__ == "__main__":
    from greedy_graph import cycle_graph, parse_graph

    logging.basicConfig(level=logging.INFO, format="%(levelname)-8s %(message)s")
    draw_pseudo_tree(cycle_graph(5))
    draw_pseudo_tree(parse_graph("a b\nb c\nc d\nd a\na x1\na x2\na x3\na x4"))
    draw_pseudo_tree(parse_graph("a b\nb c\nc d\nd a\na x\nc y\nx x1\nx x2\ny y1\ny y2"))
