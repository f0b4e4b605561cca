"""Exact two-phase simplex over the rationals.

    Linear programs have the form

        maximize  c . x
        subject   A_ub x <= b_ub
                  A_eq x == b_eq
                  x >= 0

    and are solved on a dense Fraction tableau with Bland's rule (smallest
    entering index, ratio ties broken by the smallest basic index), so the
    method terminates and every answer is exact. Optimal points are checked by
    substitution before they are returned.

    To test this module run: uv run -m certification.simplex
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class LPError(Exception):
    """The simplex produced an answer that fails substitution."""
    pass


class LPStatus(Enum):
    """Outcome of a linear program"""
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    """Status, optimal value and an optimal point (None unless OPTIMAL)."""
    status: LPStatus
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None

    @property
    def is_optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


@dataclass(frozen=True)
class LinearProgram:
    """maximize objective . x under <= rows, == rows and x >= 0."""
    n_vars: int
    objective: tuple[Fraction, ...]
    upper_rows: tuple[tuple[tuple[Fraction, ...], Fraction], ...] = ()
    equal_rows: tuple[tuple[tuple[Fraction, ...], Fraction], ...] = ()
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if len(self.objective) != self.n_vars:
            raise ValueError(f"objective has {len(self.objective)} entries for {self.n_vars} variables")
        for coeffs, _ in self.upper_rows + self.equal_rows:
            if len(coeffs) != self.n_vars:
                raise ValueError(f"constraint row has {len(coeffs)} entries for {self.n_vars} variables")

    @classmethod
    def build(
        cls,
        n_vars: int,
        objective: Sequence,
        upper_rows: Sequence = (),
        equal_rows: Sequence = (),
        names: Sequence[str] = (),
    ) -> "LinearProgram":
        """Coerce every number to Fraction."""
        def rows(raw):
            return tuple((tuple(Fraction(a) for a in coeffs), Fraction(rhs)) for coeffs, rhs in raw)
        return cls(n_vars, tuple(Fraction(c) for c in objective), rows(upper_rows), rows(equal_rows), tuple(names))

    def with_objective(self, objective: Sequence) -> "LinearProgram":
        return LinearProgram(self.n_vars, tuple(Fraction(c) for c in objective), self.upper_rows, self.equal_rows, self.names)

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        """Exact membership of a point in the feasible region."""
        if any(x < 0 for x in point):
            return False
        for coeffs, rhs in self.upper_rows:
            if sum((a * x for a, x in zip(coeffs, point)), ZERO) > rhs:
                return False
        for coeffs, rhs in self.equal_rows:
            if sum((a * x for a, x in zip(coeffs, point)), ZERO) != rhs:
                return False
        return True


# ============================================================================
# TABLEAU
# ============================================================================

class _Tableau:
    """Rows [A | b] with a basis; columns are structural, slack, then artificial."""

    def __init__(self, lp: LinearProgram):
        n = lp.n_vars
        n_slack = len(lp.upper_rows)
        rows: list[list[Fraction]] = []
        needs_artificial: list[bool] = []
        slack_basis: list[int | None] = []

        for k, (coeffs, rhs) in enumerate(lp.upper_rows):
            row = list(coeffs) + [ZERO] * n_slack
            row[n + k] = ONE
            sign = 1 if rhs >= 0 else -1
            rows.append([sign * a for a in row] + [sign * rhs])
            needs_artificial.append(sign < 0)
            slack_basis.append(n + k if sign > 0 else None)
        for coeffs, rhs in lp.equal_rows:
            sign = 1 if rhs >= 0 else -1
            rows.append([sign * a for a in coeffs] + [ZERO] * n_slack + [sign * rhs])
            needs_artificial.append(True)
            slack_basis.append(None)

        n_art = sum(needs_artificial)
        self.n_real = n + n_slack
        self.n_cols = self.n_real + n_art
        self.rows: list[list[Fraction]] = []
        self.basis: list[int] = []
        art = self.n_real
        for row, needs, basic in zip(rows, needs_artificial, slack_basis):
            body, rhs = row[:-1], row[-1]
            extra = [ZERO] * n_art
            if needs:
                extra[art - self.n_real] = ONE
                basic = art
                art += 1
            self.rows.append(body + extra + [rhs])
            self.basis.append(basic)
        self.allowed = self.n_cols

    def pivot(self, i: int, j: int):
        """Make column j basic in row i."""
        pivot_row = self.rows[i]
        p = pivot_row[j]
        if p != 1:
            self.rows[i] = pivot_row = [a / p for a in pivot_row]
        for k, row in enumerate(self.rows):
            if k == i:
                continue
            factor = row[j]
            if factor:
                self.rows[k] = [a - factor * b for a, b in zip(row, pivot_row)]
        self.basis[i] = j

    def reduced_costs(self, cost: Sequence[Fraction]) -> list[Fraction]:
        reduced = list(cost[: self.allowed])
        for row, basic in zip(self.rows, self.basis):
            cb = cost[basic]
            if cb:
                for j in range(self.allowed):
                    if row[j]:
                        reduced[j] -= cb * row[j]
        return reduced

    def step(self, cost: Sequence[Fraction]) -> str:
        """One Bland step: 'optimal', 'unbounded' or 'go_on'."""
        reduced = self.reduced_costs(cost)
        entering = next((j for j, r in enumerate(reduced) if r > 0), None)
        if entering is None:
            return "optimal"

        best: tuple[Fraction, int, int] | None = None
        for i, row in enumerate(self.rows):
            a = row[entering]
            if a > 0:
                key = (row[-1] / a, self.basis[i], i)
                if best is None or key[:2] < best[:2]:
                    best = key
        if best is None:
            return "unbounded"
        self.pivot(best[2], entering)
        return "go_on"

    def run(self, cost: Sequence[Fraction]) -> str:
        steps = 0
        while True:
            status = self.step(cost)
            steps += 1
            if status != "go_on":
                logger.debug(f"simplex finished after {steps} steps: {status}")
                return status

    def value(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * row[-1] for row, b in zip(self.rows, self.basis)), ZERO)

    def point(self, n: int) -> tuple[Fraction, ...]:
        x = [ZERO] * n
        for row, b in zip(self.rows, self.basis):
            if b < n:
                x[b] = row[-1]
        return tuple(x)

    def drop_artificials(self):
        """Pivot artificial columns out of a zero-valued basis, dropping redundant rows."""
        keep_rows, keep_basis = [], []
        for i in range(len(self.rows)):
            if self.basis[i] < self.n_real:
                continue
            row = self.rows[i]
            j = next((j for j in range(self.n_real) if row[j] != 0), None)
            if j is not None:
                self.pivot(i, j)
        for row, b in zip(self.rows, self.basis):
            if b < self.n_real:
                keep_rows.append(row[: self.n_real] + [row[-1]])
                keep_basis.append(b)
        self.rows, self.basis = keep_rows, keep_basis
        self.n_cols = self.allowed = self.n_real


def _phase_one(lp: LinearProgram) -> _Tableau | None:
    """A tableau with a feasible basis, or None if the program is infeasible."""
    tableau = _Tableau(lp)
    if tableau.n_cols > tableau.n_real:
        cost = [ZERO] * tableau.n_real + [-ONE] * (tableau.n_cols - tableau.n_real)
        tableau.run(cost)
        if tableau.value(cost) < 0:
            return None
        tableau.drop_artificials()
    return tableau


def _phase_two(lp: LinearProgram, tableau: _Tableau, objective: Sequence[Fraction]) -> LPResult:
    cost = list(objective) + [ZERO] * (tableau.n_real - lp.n_vars)
    if tableau.run(cost) == "unbounded":
        return LPResult(LPStatus.UNBOUNDED)
    point = tableau.point(lp.n_vars)
    if not lp.satisfied_by(point):
        raise LPError(f"simplex point {point} fails substitution")
    value = sum((c * x for c, x in zip(objective, point)), ZERO)
    return LPResult(LPStatus.OPTIMAL, value, point)


def solve_lp(lp: LinearProgram) -> LPResult:
    """Solve one linear program exactly.

    Returns:
        LPResult with status OPTIMAL (value and point), INFEASIBLE or UNBOUNDED

    Raises:
        LPError: An optimal point failed the substitution check
    """
    tableau = _phase_one(lp)
    if tableau is None:
        return LPResult(LPStatus.INFEASIBLE)
    return _phase_two(lp, tableau, lp.objective)


def solve_lp_many(lp: LinearProgram, objectives: Sequence[Sequence]) -> list[LPResult]:
    """Solve several objectives over one feasible region, sharing phase one.

    Each objective starts from the same feasible basis.
    """
    base = _phase_one(lp)
    if base is None:
        return [LPResult(LPStatus.INFEASIBLE) for _ in objectives]
    results = []
    for objective in objectives:
        tableau = _Tableau.__new__(_Tableau)
        tableau.__dict__.update(base.__dict__)
        tableau.rows = [list(row) for row in base.rows]
        tableau.basis = list(base.basis)
        results.append(_phase_two(lp, tableau, [Fraction(c) for c in objective]))
    return results


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    # maximize x + y with x + 2y <= 4, 3x + y <= 6
    demo = LinearProgram.build(2, [1, 1], upper_rows=[([1, 2], 4), ([3, 1], 6)])
    result = solve_lp(demo)
    print(f"{result.status.value}: value={result.value} point={result.point}")
