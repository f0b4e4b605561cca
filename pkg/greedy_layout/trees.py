"""Greedy drawings of trees.

    Paths are drawn on the x axis with integer coordinates. Any other accepted
    tree is glued at an all-open root r: the neighbors of r are the rim of a
    wheel whose angles solve the reduced system of r's angle vector, and the
    subtree behind every rim vertex is drawn small inside the wedge the wheel
    leaves at it. Roots of larger degree are tried first.

    Wheel permutations are ranked by the largest tightening their system
    allows; level j solves with eps = slack / 2^j. For each wheel, kappa
    (fragment scale) is halved while the tree is not greedy, and a greedy tree
    whose margin stays below greedy_tolerance times its diameter moves the
    search on to the next wheel.

    To test this module run: uv run -m greedy_layout.trees
"""

import logging
from fractions import Fraction

import mpmath

from certification import orbit_representatives
from greedy_graph import Graph, NotATreeError, RootedTree, build_graph, decompose_at, open_roots
from opening_angles import classify_rooted, opening_angle_sup
from recognition import angle_vector_at, recognize_angle_vector, recognize_tree
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
from .geometry import wedge_at
from .wheel import NoSolution, place_wheel, solve_wheel_angles, wheel_slack

logger = logging.getLogger(__name__)

KAPPA_HALVINGS = 6


def _draw_path(tree: Graph) -> Drawing:
    ends = [v for v in tree.vertices if tree.degree(v) <= 1]
    order = [ends[0]]
    prev = None
    while True:
        nxt = [u for u in tree.neighbors(order[-1]) if u != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    coords = {v: (i, 0) for i, v in enumerate(order)}
    drawing = Drawing(tree, coords, trace=({"strategy": "path", "order": order},))
    return drawing.with_report(verify_construction(drawing))


def _finish(tree: Graph, star: Drawing, hosts: dict[str, Host], info: dict) -> Drawing | None:
    """Hang every host's subtree on the star and verify the whole tree.

    kappa starts at START_KAPPA and is halved while the tree is not greedy.

    Raises:
        ThinDrawingError: The tree is greedy but its margin is below the required one
    """
    kappa = Fraction(START_KAPPA)
    for _ in range(KAPPA_HALVINGS + 1):
        attached = attach_fragments(star, hosts, kappa)
        coords = merge_coordinates(star.coords, attached.coords)
        trace = ({"strategy": "tree", **info, "kappa": float(kappa)},) + star.trace + attached.trace
        drawing = Drawing(tree, coords, trace, attached.shrunk, attached.cones)
        report = verify_construction(drawing)
        if report.passed:
            return drawing.with_report(report)
        if is_thin(report):
            raise ThinDrawingError(
                f"margin {report.min_margin:.3e} at root {info['root']} is below {report.tolerance:.3e}"
            )
        logger.debug(f"Tree drawing at {info['root']} with kappa {kappa} failed: {report.summary()}")
        kappa /= 2
    return None


def _draw_segment(tree: Graph, root: str, parts: list[RootedTree], phis: list[Fraction]) -> Drawing | None:
    """Roots of degree 1 or 2: rim vertices on the x axis, every wedge of width 0."""
    rim = [rt.child for rt in parts]
    coords = {root: (mpmath.mpf(0), mpmath.mpf(0)), rim[0]: (mpmath.mpf(1), mpmath.mpf(0))}
    bisectors = [mpmath.mpf(180)]
    if len(rim) == 2:
        coords[rim[1]] = (mpmath.mpf(-1), mpmath.mpf(0))
        bisectors.append(mpmath.mpf(0))
    star = Drawing(build_graph([(root, v) for v in rim]), coords, ({"strategy": "segment"},))
    hosts = {v: Host(rt, phi, b, mpmath.mpf(0)) for v, rt, phi, b in zip(rim, parts, phis, bisectors)}
    try:
        return _finish(tree, star, hosts, {"root": root})
    except LayoutError as e:
        logger.debug(f"Segment at {root}: {e}")
        return None


def ranked_wheel_orders(values: list[Fraction]) -> list[tuple[tuple[int, ...], Fraction]]:
    """One permutation per dihedral class with its largest tightening, widest first; empty systems dropped."""
    ranked = [(tuple(tau), wheel_slack(values, tau)) for tau, _ in orbit_representatives(values)]
    return sorted((r for r in ranked if r[1] > 0), key=lambda r: r[1], reverse=True)


def _draw_wheel(tree: Graph, root: str, parts: list[RootedTree], phis: list[Fraction]) -> Drawing | None:
    d = len(parts)
    order = sorted(range(d), key=lambda i: phis[i], reverse=True)
    values = [phis[i] for i in order]
    ranked = ranked_wheel_orders(values)
    if not ranked:
        logger.debug(f"Wheel at {root}: every permutation gives an empty system")
        return None

    for level in range(1, CONFIG["max_retries"] + 1):
        for tau, slack in ranked:
            eps = slack / 2**level
            solved = solve_wheel_angles(values, tau, eps)
            if isinstance(solved, NoSolution):
                logger.debug(f"Wheel at {root}, tau {tau}: {solved.reason}")
                continue
            rim = [parts[order[solved.host(k)]].child for k in range(d)]
            try:
                star = place_wheel(solved, hub=root, rim=rim)
                hosts: dict[str, Host] = {}
                with mpmath.workprec(CONFIG["layout_precision_bits"]):
                    for k, v in enumerate(rim):
                        bisector, width = wedge_at(star.coords[v], star.coords[rim[k - 1]], star.coords[rim[(k + 1) % d]])
                        index = order[solved.host(k)]
                        hosts[v] = Host(parts[index], phis[index], bisector, width)
                info = {"root": root, "tau": list(tau), "eps": str(eps), "level": level}
                drawing = _finish(tree, star, hosts, info)
            except LayoutError as e:
                logger.debug(f"Wheel at {root}, tau {tau}, eps {eps}: {e}")
                continue
            if drawing is not None:
                return drawing
    return None


def draw_tree(tree: Graph) -> Drawing | NotDrawable:
    """Verified greedy drawing of a tree, or NotDrawable with the recognizer's decision.

    Raises:
        NotATreeError: The input is not a tree
        ConstructionError: Every root and retry failed verification
    """
    if not tree.is_tree:
        raise NotATreeError(f"draw_tree needs a tree, got {tree.kind.value}")
    decision = recognize_tree(tree)
    if not decision.drawable:
        logger.info(f"❌ Tree is not greedy-drawable ({decision.rule.value})")
        return NotDrawable(decision)
    if len(tree) <= 2 or tree.max_degree <= 2:
        return _draw_path(tree)

    roots = sorted(open_roots(tree), key=tree.degree, reverse=True)
    for root in roots:
        vector, _ = angle_vector_at(tree, root)
        if not recognize_angle_vector(vector).drawable:
            continue
        parts = decompose_at(tree, root)
        phis = [opening_angle_sup(classify_rooted(rt)).value for rt in parts]
        if len(parts) <= 2:
            drawing = _draw_segment(tree, root, parts, phis)
        else:
            drawing = _draw_wheel(tree, root, parts, phis)
        if drawing is not None:
            logger.info(f"✅ Drew tree on {len(tree)} vertices at root {root}: {drawing.report.summary()}")
            return drawing
        logger.warning(f"⚠️ Root {root} exhausted its retries, trying the next one")

    raise ConstructionError(f"no verified drawing for the tree on {len(tree)} vertices (roots tried: {roots})")


if __name__ == "__main__":
    from greedy_graph import parse_graph, star_graph

    logging.basicConfig(level=logging.INFO, format="%(levelname)-8s %(message)s")
    draw_tree(star_graph(5))
    draw_tree(parse_graph("r a\nr b\nr c\nr d\na a1\na a2\nb b1\nb b2"))
    draw_tree(star_graph(6))
