"""Certificates for degree-5 (and general degree-d) angle vectors.

    Infeasibility of an angle vector phi means: for every permutation tau the
    open system S has no point where omega vanishes. Permutations are solved
    once per rotation/reflection class of the permuted sequence. A class is
    settled when S is empty (EmptyStrict) or when omega keeps one sign over
    the bounding boxes of S, after optional cuts along hyperplanes
    x_j = t and automatic bisection of undecided pieces (SingleSignOverBoxes).

    Feasibility is certified by two closure points of opposite omega sign
    (FeasiblePair); S is convex and omega continuous, so omega vanishes on the
    segment between them.

    To test this module run: uv run -m certification.certify
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations

from settings import CONFIG

from .intervals import RationalInterval
from .omega import BoxOutOfRangeError, OmegaSign, SignReport, omega_bounds_over_box, sign_of_omega_at
from .reduced_system import (
    Box,
    Feasible,
    ReducedSystem,
    VariableBound,
    angle_values,
    build_reduced_system,
    closure_bounding_box,
    strict_feasible,
    variable_name,
)
from .simplex import solve_lp_many

logger = logging.getLogger(__name__)

Cut = tuple[int, tuple[Fraction, ...]]


class CertificateKind(Enum):
    """What a certificate proves"""
    EMPTY_STRICT = "EmptyStrict"
    SINGLE_SIGN = "SingleSignOverBoxes"
    FEASIBLE_PAIR = "FeasiblePair"


def _fraction_list(values) -> list[str] | None:
    return None if values is None else [str(Fraction(v)) for v in values]


def _interval_dict(interval: RationalInterval | None) -> dict | None:
    if interval is None:
        return None
    return {"lo": f"{float(interval.lo):.15f}", "hi": f"{float(interval.hi):.15f}"}


def _bounds_text(bounds: Sequence[VariableBound], d: int) -> list[str]:
    texts = []
    for bound in bounds:
        name = variable_name(bound.index, d)
        lo = "" if bound.lower is None else f"{bound.lower} <= "
        hi = "" if bound.upper is None else f" <= {bound.upper}"
        texts.append(f"{lo}{name}{hi}")
    return texts


@dataclass(frozen=True)
class PieceBound:
    """A piece of S (its extra bounds), its bounding box and omega enclosure."""
    bounds: tuple[VariableBound, ...]
    box: Box
    omega: RationalInterval

    def to_dict(self) -> dict:
        return {"bounds": _bounds_text(self.bounds, self.box.d), "omega": _interval_dict(self.omega)}


@dataclass(frozen=True)
class Certificate:
    """Proof for one (phi, tau) case.

    EMPTY_STRICT certificates carry nothing else. SINGLE_SIGN ones carry the
    sign, the unsplit box with its enclosure, the pieces and an interior
    witness. FEASIBLE_PAIR ones carry x_plus, x_minus and their sign reports.
    """
    kind: CertificateKind
    phi: tuple[Fraction, ...]
    tau: tuple[int, ...]
    sign: int = 0
    box: Box | None = None
    omega: RationalInterval | None = None
    pieces: tuple[PieceBound, ...] = ()
    witness: tuple[Fraction, ...] | None = None
    x_plus: tuple[Fraction, ...] | None = None
    x_minus: tuple[Fraction, ...] | None = None
    evidence: tuple[SignReport, SignReport] | None = None

    @property
    def sequence(self) -> tuple[Fraction, ...]:
        return tuple(self.phi[t] for t in self.tau)

    @property
    def ok(self) -> bool:
        """Whether the carried evidence supports the kind."""
        match self.kind:
            case CertificateKind.EMPTY_STRICT:
                return True
            case CertificateKind.SINGLE_SIGN:
                return (
                    self.sign != 0
                    and bool(self.pieces)
                    and all(piece.omega.sign() == self.sign for piece in self.pieces)
                )
            case CertificateKind.FEASIBLE_PAIR:
                if self.evidence is None or self.x_plus is None or self.x_minus is None:
                    return False
                plus, minus = self.evidence
                return plus.sign is OmegaSign.POSITIVE and minus.sign is OmegaSign.NEGATIVE
        return False

    def to_dict(self) -> dict:
        data = {
            "kind": self.kind.value,
            "phi": _fraction_list(self.phi),
            "tau": list(self.tau),
            "sequence": _fraction_list(self.sequence),
        }
        if self.kind is CertificateKind.SINGLE_SIGN:
            data.update(
                sign=self.sign,
                omega=_interval_dict(self.omega),
                witness=_fraction_list(self.witness),
                box={"lower": _fraction_list(self.box.lower()), "upper": _fraction_list(self.box.upper())},
                pieces=[p.to_dict() for p in self.pieces],
            )
        if self.kind is CertificateKind.FEASIBLE_PAIR:
            data.update(
                x_plus=_fraction_list(self.x_plus),
                x_minus=_fraction_list(self.x_minus),
                omega_plus=_interval_dict(self.evidence[0].enclosure),
                omega_minus=_interval_dict(self.evidence[1].enclosure),
            )
        return data


@dataclass(frozen=True)
class VectorCertificate:
    """Infeasibility of phi: one certificate per rotation/reflection class."""
    phi: tuple[Fraction, ...]
    cases: tuple[Certificate, ...]

    @property
    def ok(self) -> bool:
        return bool(self.cases) and all(
            case.ok and case.kind is not CertificateKind.FEASIBLE_PAIR for case in self.cases
        )

    @property
    def nonempty_cases(self) -> tuple[Certificate, ...]:
        return tuple(c for c in self.cases if c.kind is CertificateKind.SINGLE_SIGN)

    def to_dict(self) -> dict:
        return {
            "phi": _fraction_list(self.phi),
            "infeasible": True,
            "classes": len(self.cases),
            "cases": [c.to_dict() for c in self.cases],
        }


@dataclass(frozen=True)
class CertificationFailure:
    """A case the certifier could not settle, with what it last saw."""
    phi: tuple[Fraction, ...]
    tau: tuple[int, ...] | None
    reason: str
    piece: tuple[VariableBound, ...] = ()
    box: Box | None = None
    omega: RationalInterval | None = None

    @property
    def ok(self) -> bool:
        return False

    def to_dict(self) -> dict:
        d = len(self.phi)
        return {
            "phi": _fraction_list(self.phi),
            "tau": None if self.tau is None else list(self.tau),
            "reason": self.reason,
            "piece": _bounds_text(self.piece, d),
            "omega": _interval_dict(self.omega),
        }


# ============================================================================
# PERMUTATION CLASSES
# ============================================================================

def dihedral_key(sequence: Sequence) -> tuple:
    """Smallest rotation of the sequence or of its reversal."""
    seq = tuple(sequence)
    n = len(seq)
    images = []
    for s in (seq, tuple(reversed(seq))):
        images.extend(s[k:] + s[:k] for k in range(n))
    return min(images)


def orbit_representatives(
    phi: Sequence[Fraction], preferred: Sequence[Sequence[Fraction]] = ()
) -> list[tuple[tuple[int, ...], tuple[Fraction, ...]]]:
    """One (tau, phi_tau) per rotation/reflection class of the permuted sequence.

    Args:
        phi: Sorted angle values
        preferred: Sequences to use as representatives when their class occurs
    """
    preferred_set = {tuple(Fraction(v) for v in p) for p in preferred}
    chosen: dict[tuple, tuple[tuple[int, ...], tuple[Fraction, ...]]] = {}
    for tau in permutations(range(len(phi))):
        seq = tuple(phi[t] for t in tau)
        key = dihedral_key(seq)
        if key not in chosen:
            chosen[key] = (tau, seq)
        elif seq in preferred_set and chosen[key][1] not in preferred_set:
            chosen[key] = (tau, seq)
    return list(chosen.values())


def cut_pieces(cuts: Sequence[Cut]) -> list[tuple[VariableBound, ...]]:
    """Closed pieces cut out by hyperplanes x_j = t for every (j, thresholds)."""
    pieces: list[tuple[VariableBound, ...]] = [()]
    for index, thresholds in cuts:
        ends = [None] + sorted(Fraction(t) for t in thresholds) + [None]
        pieces = [
            piece + (VariableBound(index, lo, hi),)
            for piece in pieces
            for lo, hi in zip(ends[:-1], ends[1:])
        ]
    return pieces


def _cuts_for(sequence: tuple[Fraction, ...], cuts) -> list[Cut]:
    if not cuts:
        return []
    if isinstance(cuts, Mapping):
        found = cuts.get(sequence)
        if found is None:
            return []
        # a single (index, thresholds) pair or a list of them
        return [found] if isinstance(found[0], int) else list(found)
    return list(cuts)


# ============================================================================
# INFEASIBILITY
# ============================================================================

def _bisect(bounds: tuple[VariableBound, ...], box: Box) -> list[tuple[VariableBound, ...]]:
    j = box.widest_variable()
    middle = box.intervals[j].midpoint
    return [bounds + (VariableBound(j, None, middle),), bounds + (VariableBound(j, middle, None),)]


def _resolve_pieces(
    system: ReducedSystem, pieces: list[tuple[VariableBound, ...]], max_depth: int
) -> tuple[list[PieceBound], CertificationFailure | None]:
    """Bound omega on every piece, bisecting undecided ones up to max_depth times."""
    resolved: list[PieceBound] = []
    stack = [(piece, 0) for piece in reversed(pieces)]
    while stack:
        bounds, depth = stack.pop()
        piece_system = system.with_bounds(*bounds)
        box = closure_bounding_box(piece_system)
        if box is None:
            continue
        omega = None
        try:
            omega = omega_bounds_over_box(box)
            decided = omega.excludes_zero()
        except BoxOutOfRangeError:
            decided = False
        if decided:
            resolved.append(PieceBound(bounds, box, omega))
            continue
        if depth >= max_depth:
            return resolved, CertificationFailure(
                tuple(system.phi), system.tau, "omega not single-signed on piece", bounds, box, omega
            )
        logger.debug(f"Bisecting {system} piece {_bounds_text(bounds, system.d)} at depth {depth}")
        stack.extend((sub, depth + 1) for sub in reversed(_bisect(bounds, box)))
    return resolved, None


def certify_case(
    phi: Sequence[Fraction], tau: Sequence[int], cuts=None, max_split_depth: int | None = None
) -> Certificate | CertificationFailure:
    """Certify that omega has no zero in S for one (phi, tau)."""
    phi = angle_values(phi)
    tau = tuple(tau)
    max_depth = CONFIG["max_split_depth"] if max_split_depth is None else max_split_depth
    system = build_reduced_system(phi, tau)
    outcome = strict_feasible(system)
    if not isinstance(outcome, Feasible):
        return Certificate(CertificateKind.EMPTY_STRICT, phi, tau)

    whole = closure_bounding_box(system)
    try:
        whole_omega = omega_bounds_over_box(whole)
    except BoxOutOfRangeError:
        whole_omega = None
    pieces, failure = _resolve_pieces(system, cut_pieces(_cuts_for(system.phi, cuts)), max_depth)
    if failure is not None:
        return CertificationFailure(phi, tau, failure.reason, failure.piece, failure.box, failure.omega)

    signs = {piece.omega.sign() for piece in pieces}
    if len(signs) != 1:
        return CertificationFailure(phi, tau, f"pieces disagree on the sign of omega: {sorted(signs)}")
    return Certificate(
        CertificateKind.SINGLE_SIGN,
        phi,
        tau,
        sign=signs.pop(),
        box=whole,
        omega=whole_omega,
        pieces=tuple(pieces),
        witness=outcome.witness,
    )


def certify_infeasible_vector(
    phi, cuts=None, max_split_depth: int | None = None, preferred: Sequence = ()
) -> VectorCertificate | CertificationFailure:
    """Certify that no permutation of phi admits a wheel with omega = 0.

    Args:
        phi: Sorted AngleVector or sequence of angles
        cuts: Either a mapping from phi_tau sequences to their cuts, or a list
            of (variable index, thresholds) applied to every nonempty case
        max_split_depth: Bisection depth for undecided pieces
        preferred: phi_tau sequences to report classes under, when they occur

    Returns:
        VectorCertificate, or the first CertificationFailure met
    """
    values = angle_values(phi)
    preferred = list(preferred) + (list(cuts.keys()) if isinstance(cuts, Mapping) else [])
    representatives = orbit_representatives(values, preferred)
    logger.debug(f"{len(representatives)} permutation classes for {tuple(str(v) for v in values)}")

    cases = []
    for tau, _ in representatives:
        outcome = certify_case(values, tau, cuts, max_split_depth)
        if isinstance(outcome, CertificationFailure):
            logger.warning(f"⚠️ Could not certify tau={tau} for {tuple(str(v) for v in values)}: {outcome.reason}")
            return outcome
        if not outcome.ok:
            return CertificationFailure(values, tau, f"{outcome.kind.value} certificate does not hold")
        cases.append(outcome)
    return VectorCertificate(values, tuple(cases))


# ============================================================================
# FEASIBILITY
# ============================================================================

def certify_feasible_pair(phi, tau: Sequence[int], x_plus: Sequence, x_minus: Sequence) -> Certificate | CertificationFailure:
    """Check two closure points with omega(x_plus) > 0 > omega(x_minus).

    Returns:
        Certificate of kind FEASIBLE_PAIR, or a CertificationFailure naming the
        violated constraint or the sign mismatch
    """
    values = angle_values(phi)
    tau = tuple(tau)
    system = build_reduced_system(values, tau)
    points = {"x_plus": tuple(Fraction(x) for x in x_plus), "x_minus": tuple(Fraction(x) for x in x_minus)}
    for name, point in points.items():
        violated = system.violated_constraint(point)
        if violated is not None:
            return CertificationFailure(values, tau, f"{name} violates {violated}")

    plus = sign_of_omega_at(points["x_plus"])
    minus = sign_of_omega_at(points["x_minus"])
    if plus.sign is not OmegaSign.POSITIVE or minus.sign is not OmegaSign.NEGATIVE:
        return CertificationFailure(
            values, tau, f"sign mismatch: omega(x_plus) {plus.sign.value}, omega(x_minus) {minus.sign.value}"
        )
    return Certificate(
        CertificateKind.FEASIBLE_PAIR,
        values,
        tau,
        x_plus=points["x_plus"],
        x_minus=points["x_minus"],
        evidence=(plus, minus),
    )


def spread_objectives(d: int) -> list[list[Fraction]]:
    """LP objectives whose optima spread over the polytope: +-sum(beta - gamma), +-each
    variable, +-(beta_i - gamma_i)."""
    n = 2 * d
    objectives = []
    tilt = [Fraction(1)] * d + [Fraction(-1)] * d
    objectives.append(tilt)
    objectives.append([-a for a in tilt])
    for j in range(n):
        unit = [Fraction(0)] * n
        unit[j] = Fraction(1)
        objectives.append(unit)
        objectives.append([-a for a in unit])
    for i in range(d):
        diff = [Fraction(0)] * n
        diff[i], diff[d + i] = Fraction(1), Fraction(-1)
        objectives.append(diff)
        objectives.append([-a for a in diff])
    return objectives


def search_feasible_pair(phi, tau: Sequence[int]) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]] | None:
    """Closure vertices of opposite omega sign, found by probing LP objectives.

    Returns:
        (x_plus, x_minus), or None when no sampled vertex pair has opposite signs
    """
    system = build_reduced_system(angle_values(phi), tau)
    results = solve_lp_many(system.closure_program(), spread_objectives(system.d))
    plus = minus = None
    for result in results:
        if not result.is_optimal:
            continue
        report = sign_of_omega_at(result.point)
        if report.sign is OmegaSign.POSITIVE and plus is None:
            plus = result.point
        elif report.sign is OmegaSign.NEGATIVE and minus is None:
            minus = result.point
        if plus is not None and minus is not None:
            return plus, minus
    return None


def certify_feasible_vector(phi) -> Certificate | CertificationFailure:
    """Search every permutation class with nonempty S for a feasible pair."""
    values = angle_values(phi)
    for tau, _ in orbit_representatives(values):
        if not isinstance(strict_feasible(build_reduced_system(values, tau)), Feasible):
            continue
        pair = search_feasible_pair(values, tau)
        if pair is not None:
            return certify_feasible_pair(values, tau, *pair)
    return CertificationFailure(values, None, "no permutation class yields points of opposite omega sign")


if __name__ == "__main__":
    from .reference_cases import FEASIBLE_CASES, MAXIMAL_INFEASIBLE_VECTORS, REFERENCE_CUTS

    logging.basicConfig(level=logging.INFO)
    result = certify_infeasible_vector(MAXIMAL_INFEASIBLE_VECTORS[0], REFERENCE_CUTS)
    print(f"{MAXIMAL_INFEASIBLE_VECTORS[0]}: {'certified' if result.ok else result.reason}")
    case = FEASIBLE_CASES["I"]
    pair = certify_feasible_pair(case.phi, case.tau, case.x_plus, case.x_minus)
    print(f"case I feasible pair: {'certified' if pair.ok else pair.reason}")
