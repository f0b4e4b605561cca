"""The linear system of a degree-d wheel after eliminating the centre angles.

    Variables are beta_0..beta_{d-1} followed by gamma_0..gamma_{d-1}. For a
    sequence phi_0..phi_{d-1} (the sorted suprema already permuted by tau) the
    open set S is cut out by

        0 < beta_i, gamma_i < 180
        2 beta_i + gamma_i < 180,   beta_i + 2 gamma_i < 180
        beta_i + gamma_{(i+1) mod d} < phi_i
        sum(beta_i + gamma_i) = 180 d - 360

    Strict feasibility is decided by maximizing a common slack on every strict
    row; bounding boxes are taken over the closure of S, optionally cut down
    by extra closed bounds on single variables (the pieces of a split).

    To test this module run: uv run -m certification.reduced_system
"""

import logging
import re
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from opening_angles import ExactAngle

from .intervals import RationalInterval
from .simplex import LinearProgram, LPStatus, solve_lp, solve_lp_many

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class CertificationError(Exception):
    """Base class for certification errors."""
    pass


class EmptyClosureError(CertificationError):
    """The closure of the system (or of one of its pieces) is empty."""
    pass


class InvalidPermutationError(CertificationError, ValueError):
    """tau is not a permutation of 0..d-1."""
    pass


# ============================================================================
# VARIABLES
# ============================================================================

_VARIABLE_PATTERN = re.compile(r"^(beta|gamma)_?(\d+)$")


def variable_name(index: int, d: int) -> str:
    """'beta_i' for index i < d, 'gamma_i' for index d + i."""
    return f"beta_{index}" if index < d else f"gamma_{index - d}"


def variable_index(name: str, d: int) -> int:
    """Inverse of variable_name; accepts 'gamma_4' and 'gamma4'.

    Raises:
        ValueError: Unknown variable name
    """
    match = _VARIABLE_PATTERN.match(name.strip().lower())
    if not match or int(match.group(2)) >= d:
        raise ValueError(f"unknown variable '{name}' for d={d}")
    i = int(match.group(2))
    return i if match.group(1) == "beta" else d + i


@dataclass(frozen=True)
class Constraint:
    """coeffs . x < rhs (strict) or coeffs . x == rhs (equality)."""
    label: str
    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    equality: bool = False

    def lhs(self, point: Sequence[Fraction]) -> Fraction:
        return sum((a * x for a, x in zip(self.coeffs, point) if a), ZERO)


@dataclass(frozen=True)
class VariableBound:
    """Closed bound lower <= x_index <= upper (either end optional)."""
    index: int
    lower: Fraction | None = None
    upper: Fraction | None = None


@dataclass(frozen=True)
class Box:
    """Per-variable closed intervals, betas first."""
    d: int
    intervals: tuple[RationalInterval, ...]

    def __post_init__(self):
        if len(self.intervals) != 2 * self.d:
            raise ValueError(f"a box for d={self.d} needs {2 * self.d} intervals, got {len(self.intervals)}")

    @classmethod
    def from_bounds(cls, d: int, lower: Sequence, upper: Sequence) -> "Box":
        return cls(d, tuple(RationalInterval.of(lo, hi) for lo, hi in zip(lower, upper, strict=True)))

    def beta(self, i: int) -> RationalInterval:
        return self.intervals[i]

    def gamma(self, i: int) -> RationalInterval:
        return self.intervals[self.d + i]

    def within(self, lo, hi) -> bool:
        return all(lo <= iv.lo and iv.hi <= hi for iv in self.intervals)

    def contains(self, point: Sequence[Fraction]) -> bool:
        return all(iv.contains(x) for iv, x in zip(self.intervals, point))

    def subset_of(self, other: "Box") -> bool:
        return all(o.lo <= s.lo and s.hi <= o.hi for s, o in zip(self.intervals, other.intervals))

    def widest_variable(self) -> int:
        return max(range(len(self.intervals)), key=lambda j: self.intervals[j].width)

    def lower(self) -> tuple[Fraction, ...]:
        return tuple(iv.lo for iv in self.intervals)

    def upper(self) -> tuple[Fraction, ...]:
        return tuple(iv.hi for iv in self.intervals)


# ============================================================================
# SYSTEM
# ============================================================================

@dataclass(frozen=True)
class ReducedSystem:
    """Strict linear system of one (phi, tau) case.

    Attributes:
        d: Number of wheel triangles
        phi: phi_tau(0..d-1), the bounds of the mixed rows
        tau: The permutation that produced phi, when known
        bounds: Extra closed variable bounds (split pieces)
    """
    d: int
    phi: tuple[Fraction, ...]
    tau: tuple[int, ...] | None = None
    bounds: tuple[VariableBound, ...] = ()

    @property
    def n_vars(self) -> int:
        return 2 * self.d

    @property
    def total(self) -> Fraction:
        return Fraction(180 * self.d - 360)

    def _unit(self, *terms: tuple[int, int]) -> tuple[Fraction, ...]:
        coeffs = [ZERO] * self.n_vars
        for index, coefficient in terms:
            coeffs[index] += coefficient
        return tuple(coeffs)

    def strict_rows(self) -> list[Constraint]:
        """The 4d bound rows, 2d triangle rows and d mixed rows, all strict."""
        d = self.d
        rows: list[Constraint] = []
        for j in range(self.n_vars):
            name = variable_name(j, d)
            rows.append(Constraint(f"{name} > 0", self._unit((j, -1)), ZERO))
            rows.append(Constraint(f"{name} < 180", self._unit((j, 1)), Fraction(180)))
        for i in range(d):
            rows.append(Constraint(f"2 beta_{i} + gamma_{i} < 180", self._unit((i, 2), (d + i, 1)), Fraction(180)))
            rows.append(Constraint(f"beta_{i} + 2 gamma_{i} < 180", self._unit((i, 1), (d + i, 2)), Fraction(180)))
        for i in range(d):
            nxt = (i + 1) % d
            rows.append(
                Constraint(
                    f"beta_{i} + gamma_{nxt} < {self.phi[i]}",
                    self._unit((i, 1), (d + nxt, 1)),
                    self.phi[i],
                )
            )
        return rows

    def equality(self) -> Constraint:
        return Constraint(f"sum = {self.total}", tuple(ONE for _ in range(self.n_vars)), self.total, equality=True)

    def constraints(self) -> list[Constraint]:
        return self.strict_rows() + [self.equality()]

    def bound_rows(self) -> list[tuple[tuple[Fraction, ...], Fraction, str]]:
        """Closed piece bounds as (coeffs, rhs, label) rows of coeffs . x <= rhs."""
        rows = []
        for bound in self.bounds:
            name = variable_name(bound.index, self.d)
            if bound.upper is not None:
                rows.append((self._unit((bound.index, 1)), bound.upper, f"{name} <= {bound.upper}"))
            if bound.lower is not None:
                rows.append((self._unit((bound.index, -1)), -bound.lower, f"{name} >= {bound.lower}"))
        return rows

    def with_bounds(self, *bounds: VariableBound) -> "ReducedSystem":
        return ReducedSystem(self.d, self.phi, self.tau, self.bounds + tuple(bounds))

    def violated_constraint(self, point: Sequence[Fraction], strict: bool = False) -> str | None:
        """Label of the first constraint the point breaks, else None.

        With strict=False the closure is checked (strict rows as <=).
        """
        point = tuple(Fraction(x) for x in point)
        if len(point) != self.n_vars:
            return f"point has {len(point)} coordinates, expected {self.n_vars}"
        for row in self.strict_rows():
            lhs = row.lhs(point)
            if lhs > row.rhs or (strict and lhs == row.rhs):
                return row.label
        if self.equality().lhs(point) != self.total:
            return self.equality().label
        for coeffs, rhs, label in self.bound_rows():
            if sum((a * x for a, x in zip(coeffs, point)), ZERO) > rhs:
                return label
        return None

    def closure_contains(self, point: Sequence[Fraction]) -> bool:
        return self.violated_constraint(point) is None

    def strictly_contains(self, point: Sequence[Fraction]) -> bool:
        return self.violated_constraint(point, strict=True) is None

    def closure_program(self, objective: Sequence | None = None) -> LinearProgram:
        """The closure of S (plus piece bounds) as a linear program."""
        upper = [(row.coeffs, row.rhs) for row in self.strict_rows()]
        upper += [(coeffs, rhs) for coeffs, rhs, _ in self.bound_rows()]
        eq = self.equality()
        objective = objective if objective is not None else [ZERO] * self.n_vars
        return LinearProgram.build(
            self.n_vars,
            objective,
            upper_rows=upper,
            equal_rows=[(eq.coeffs, eq.rhs)],
            names=[variable_name(j, self.d) for j in range(self.n_vars)],
        )

    def shrunk_program(self, eps, objective: Sequence | None = None) -> LinearProgram:
        """Every strict row tightened to row <= rhs - eps; its points lie strictly inside S."""
        eps = Fraction(eps)
        eq = self.equality()
        objective = objective if objective is not None else [ZERO] * self.n_vars
        return LinearProgram.build(
            self.n_vars,
            objective,
            upper_rows=[(row.coeffs, row.rhs - eps) for row in self.strict_rows()],
            equal_rows=[(eq.coeffs, eq.rhs)],
            names=[variable_name(j, self.d) for j in range(self.n_vars)],
        )

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.phi) + ")"


def angle_values(phi) -> tuple[Fraction, ...]:
    """Exact values of an AngleVector, a sequence of ExactAngle or plain numbers."""
    values = getattr(phi, "values", phi)
    return tuple(v.value if isinstance(v, ExactAngle) else Fraction(v) for v in values)


def build_reduced_system(phi, tau: Sequence[int] | None = None) -> ReducedSystem:
    """The system of a sorted angle vector under the permutation tau.

    Args:
        phi: AngleVector or sequence of angles phi_0..phi_{d-1}
        tau: Permutation of 0..d-1; the mixed row i uses phi[tau[i]].
            None uses phi as already permuted.

    Raises:
        InvalidPermutationError: tau is not a permutation of 0..d-1
    """
    values = angle_values(phi)
    d = len(values)
    if tau is None:
        return ReducedSystem(d, values)
    tau = tuple(int(t) for t in tau)
    if sorted(tau) != list(range(d)):
        raise InvalidPermutationError(f"tau={tau} is not a permutation of 0..{d - 1}")
    return ReducedSystem(d, tuple(values[t] for t in tau), tau)


# ============================================================================
# LINEAR PROGRAMS
# ============================================================================

@dataclass(frozen=True)
class Feasible:
    """S is nonempty; witness lies strictly inside it."""
    witness: tuple[Fraction, ...]
    slack: Fraction


@dataclass(frozen=True)
class Infeasible:
    """S is empty (the optimal common slack is not positive)."""
    slack: Fraction | None = None


def strict_feasible(system: ReducedSystem) -> Feasible | Infeasible:
    """Decide nonemptiness of the open set S.

    Every strict row gets a common slack delta <= 1, which is maximized; S is
    nonempty iff the optimum is positive, and the optimal point is then an
    interior point.

    Raises:
        CertificationError: Unbounded slack or a witness that fails substitution
    """
    n = system.n_vars
    upper = [(row.coeffs + (ONE,), row.rhs) for row in system.strict_rows()]
    upper.append((tuple(ZERO for _ in range(n)) + (ONE,), ONE))
    eq = system.equality()
    lp = LinearProgram.build(
        n + 1,
        [ZERO] * n + [ONE],
        upper_rows=upper,
        equal_rows=[(eq.coeffs + (ZERO,), eq.rhs)],
    )
    result = solve_lp(lp)
    if result.status is LPStatus.INFEASIBLE:
        return Infeasible()
    if result.status is LPStatus.UNBOUNDED:
        raise CertificationError(f"slack is unbounded for {system}")
    slack = result.value
    if slack <= 0:
        return Infeasible(slack)
    witness = result.point[:n]
    if not system.strictly_contains(witness):
        raise CertificationError(f"interior witness of {system} fails substitution")
    return Feasible(witness, slack)


def closure_bounding_box(system: ReducedSystem) -> Box | None:
    """Exact per-variable min/max over the closure, or None if it is empty."""
    n = system.n_vars
    objectives = []
    for j in range(n):
        unit = [ZERO] * n
        unit[j] = ONE
        objectives.append(unit)
        objectives.append([-a for a in unit])
    results = solve_lp_many(system.closure_program(), objectives)
    if results[0].status is LPStatus.INFEASIBLE:
        return None
    intervals = []
    for j in range(n):
        high, low = results[2 * j], results[2 * j + 1]
        if not (high.is_optimal and low.is_optimal):
            raise CertificationError(f"bounding {variable_name(j, system.d)} of {system} failed: {high.status.value}")
        intervals.append(RationalInterval(-low.value, high.value))
    return Box(system.d, tuple(intervals))


def bounding_box(system: ReducedSystem) -> Box:
    """Axis-aligned bounding box of the closure of S.

    Raises:
        EmptyClosureError: The closure is empty
    """
    box = closure_bounding_box(system)
    if box is None:
        raise EmptyClosureError(f"closure of {system} is empty")
    logger.debug(f"Bounding box of {system}: {[str(iv) for iv in box.intervals]}")
    return box


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    system = build_reduced_system([Fraction(120), 120, 120, Fraction(255, 8), 180])
    outcome = strict_feasible(system)
    print(f"{system}: {type(outcome).__name__}")
    if isinstance(outcome, Feasible):
        box = bounding_box(system)
        for j, interval in enumerate(box.intervals):
            print(f"  {variable_name(j, system.d):>8}: [{interval.lo}, {interval.hi}]")
