"""Wheel angles and wheel placement.

    The hub r of an accepted vertex is the center of a wheel r, w_0..w_{d-1};
    triangle i is (r, w_i, w_{i+1}) with alpha_i at r, gamma_i at w_i and
    beta_i at w_{i+1}. The angles come from the reduced linear system of the
    sorted angle vector under a permutation tau, tightened by eps, plus the
    closing condition prod sin(beta_i) = prod sin(gamma_i), reached by bisecting
    omega between two points of opposite sign.

    Rim vertex w_k hosts the subtree with sorted index tau[k - 1]; its wedge
    beta_{k-1} + gamma_k is what the subtree's opening angle must exceed.

    To test this module run: uv run -m greedy_layout.wheel
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from certification import LinearProgram, angle_values, build_reduced_system, spread_objectives, solve_lp, solve_lp_many
from greedy_graph import build_graph
from settings import CONFIG

from .drawing import Drawing, LayoutError
from .geometry import mpf_of, scaled, sind, unit

logger = logging.getLogger(__name__)

MAX_BISECTIONS = 200
MAX_SLACK = Fraction(90)


@dataclass(frozen=True)
class WheelAngles:
    """Solved wheel angles in degrees (mpmath floats), betas and gammas as in the reduced system.

    Attributes:
        d: Number of rim vertices
        alpha: Angles at the hub
        beta: beta_i at w_{i+1}
        gamma: gamma_i at w_i
        residual: |prod sin(beta) - prod sin(gamma)|
        tau: Permutation the mixed rows were built with
        eps: Tightening of the strict rows
    """
    d: int
    alpha: tuple[mpmath.mpf, ...]
    beta: tuple[mpmath.mpf, ...]
    gamma: tuple[mpmath.mpf, ...]
    residual: mpmath.mpf
    tau: tuple[int, ...]
    eps: Fraction

    def wedge(self, k: int) -> mpmath.mpf:
        """Polygon angle at rim vertex w_k: beta_{k-1} + gamma_k."""
        return self.beta[(k - 1) % self.d] + self.gamma[k % self.d]

    def host(self, k: int) -> int:
        """Sorted angle-vector index of the subtree hosted at w_k."""
        return self.tau[(k - 1) % self.d]

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "alpha": [float(a) for a in self.alpha],
            "beta": [float(b) for b in self.beta],
            "gamma": [float(g) for g in self.gamma],
            "residual": float(self.residual),
            "tau": list(self.tau),
            "eps": str(self.eps),
        }


@dataclass(frozen=True)
class NoSolution:
    """The eps-tightened system gave no usable point; retry with a smaller eps or another tau."""
    reason: str
    eps: Fraction
    tau: tuple[int, ...] = ()


def omega(point: Sequence) -> mpmath.mpf:
    """prod sin(beta_i) - prod sin(gamma_i) at the working precision."""
    d = len(point) // 2
    return mpmath.fprod(sind(x) for x in point[:d]) - mpmath.fprod(sind(x) for x in point[d:])


def _angles(point: Sequence, tau: tuple[int, ...], eps: Fraction) -> WheelAngles:
    d = len(point) // 2
    beta = tuple(mpf_of(x) for x in point[:d])
    gamma = tuple(mpf_of(x) for x in point[d:])
    alpha = tuple(180 - b - g for b, g in zip(beta, gamma))
    return WheelAngles(d, alpha, beta, gamma, abs(omega(beta + gamma)), tau, eps)


def _check_invariants(w: WheelAngles) -> None:
    tol = mpf_of(CONFIG["omega_tolerance"])
    if abs(mpmath.fsum(w.alpha) - 360) > tol:
        raise LayoutError(f"hub angles sum to {mpmath.nstr(mpmath.fsum(w.alpha), 15)}, expected 360")
    for i in range(w.d):
        if not (w.beta[i] < w.alpha[i] and w.gamma[i] < w.alpha[i]):
            raise LayoutError(f"triangle {i} breaks beta < alpha, gamma < alpha")
    if w.residual > tol:
        raise LayoutError(f"omega residual {mpmath.nstr(w.residual, 5)} above {CONFIG['omega_tolerance']}")


def wheel_slack(phi, tau: Sequence[int] | None = None) -> Fraction:
    """Largest eps (capped at MAX_SLACK) for which the eps-tightened system of phi under tau is nonempty.

    Returns:
        The optimal common slack of every strict row, or 0 when the open system is empty
    """
    system = build_reduced_system(angle_values(phi), tau)
    n = system.n_vars
    eq = system.equality()
    upper = [(row.coeffs + (Fraction(1),), row.rhs) for row in system.strict_rows()]
    upper.append(((Fraction(0),) * n + (Fraction(1),), MAX_SLACK))
    lp = LinearProgram.build(n + 1, [0] * n + [1], upper_rows=upper, equal_rows=[(eq.coeffs + (Fraction(0),), eq.rhs)])
    result = solve_lp(lp)
    if not result.is_optimal or result.value <= 0:
        return Fraction(0)
    return result.value


def solve_wheel_angles(phi, tau: Sequence[int] | None = None, eps=Fraction(1)) -> WheelAngles | NoSolution:
    """Wheel angles for a sorted angle vector under the permutation tau.

    Args:
        phi: AngleVector or sorted angles phi_0..phi_{d-1}, d >= 3
        tau: Permutation of 0..d-1 (identity by default); mixed row i reads phi[tau[i]]
        eps: Positive tightening of every strict row, in degrees

    Returns:
        WheelAngles with residual <= omega_tolerance, or NoSolution when the
        tightened system is empty or omega keeps one sign on the sampled points

    Raises:
        LayoutError: d < 3 or a non-positive eps
    """
    values = angle_values(phi)
    d = len(values)
    if d < 3:
        raise LayoutError(f"a wheel needs at least 3 rim vertices, got {d}")
    tau = tuple(range(d)) if tau is None else tuple(int(t) for t in tau)
    eps = Fraction(eps)
    if eps <= 0:
        raise LayoutError(f"eps must be positive, got {eps}")

    with mpmath.workprec(CONFIG["layout_precision_bits"]):
        # regular wheel when every wedge fits
        if min(values) - eps > 180 - Fraction(360, d):
            half = Fraction(90) - Fraction(180, d)
            angles = _angles([half] * (2 * d), tau, eps)
            logger.debug(f"Regular wheel for d={d}, wedges {float(2 * half):.3f}")
            return angles

        system = build_reduced_system(values, tau)
        results = solve_lp_many(system.shrunk_program(eps), spread_objectives(d))
        points = list(dict.fromkeys(r.point for r in results if r.is_optimal))
        if not points:
            return NoSolution(f"system tightened by {eps} is empty", eps, tau)

        target = mpf_of(CONFIG["omega_tolerance"]) / 1000
        center = tuple(sum(p[j] for p in points) / len(points) for j in range(2 * d))
        omega_center = omega([mpf_of(x) for x in center])
        if abs(omega_center) <= target:
            return _angles(center, tau, eps)

        opposite = next(
            (p for p in points if omega([mpf_of(x) for x in p]) * omega_center < 0),
            None,
        )
        if opposite is None:
            return NoSolution("omega keeps one sign on every sampled point", eps, tau)

        start = [mpf_of(x) for x in center]
        step = [mpf_of(b) - a for a, b in zip(start, opposite)]
        lo, hi = mpmath.mpf(0), mpmath.mpf(1)
        point = start
        for _ in range(MAX_BISECTIONS):
            mid = (lo + hi) / 2
            point = [a + mid * s for a, s in zip(start, step)]
            value = omega(point)
            if abs(value) <= target:
                break
            if value * omega_center > 0:
                lo = mid
            else:
                hi = mid
        angles = _angles(point, tau, eps)
        if angles.residual > mpf_of(CONFIG["omega_tolerance"]):
            return NoSolution(f"bisection stalled at residual {mpmath.nstr(angles.residual, 5)}", eps, tau)
        return angles


def place_wheel(w: WheelAngles, hub: str = "r", rim: Sequence[str] | None = None) -> Drawing:
    """Star r, w_0..w_{d-1} with the wheel's triangles.

    r sits at the origin and w_0 at (1, 0); |r w_{i+1}| = |r w_i| sin(gamma_i) / sin(beta_i)
    and w_{i+1} is w_i's direction turned by alpha_i counter-clockwise.

    Raises:
        LayoutError: The angles break the WheelAngles invariants
    """
    _check_invariants(w)
    rim = [f"l{i}" for i in range(w.d)] if rim is None else list(rim)
    if len(rim) != w.d:
        raise LayoutError(f"{len(rim)} rim names for a wheel of {w.d}")

    with mpmath.workprec(CONFIG["layout_precision_bits"]):
        coords = {hub: (mpmath.mpf(0), mpmath.mpf(0))}
        radius, heading = mpmath.mpf(1), mpmath.mpf(0)
        for i, name in enumerate(rim):
            coords[name] = scaled(unit(heading), radius)
            radius = radius * sind(w.gamma[i]) / sind(w.beta[i])
            heading += w.alpha[i]
        closure = abs(radius - 1)
    if closure > 1e-9:
        logger.warning(f"⚠️ Wheel closes with radius error {float(closure):.3g}")

    graph = build_graph([(hub, name) for name in rim])
    trace = ({"strategy": "wheel", **w.to_dict(), "closure": float(closure)},)
    return Drawing(graph, coords, trace)


if __name__ == "__main__":
    from greedy_verify import check_greedy_pairwise

    logging.basicConfig(level=logging.INFO, format="%(levelname)-8s %(message)s")
    for vector, tau in (([180] * 5, None), ([180, 120, 120, 105, 45], (3, 1, 2, 4, 0))):
        solved = solve_wheel_angles(vector, tau)
        if isinstance(solved, NoSolution):
            logger.info(f"❌ {vector}: {solved.reason}")
            continue
        star = place_wheel(solved)
        logger.info(f"🔍 {vector}: residual {float(solved.residual):.2e}, {check_greedy_pairwise(star).summary()}")
