"""Verification outcomes and errors.

    A VerificationReport is a value, never an exception: passed holds exactly
    when no violation was found, which is exactly when min_margin exceeds the
    tolerance the check ran with.
"""

import math
from dataclasses import dataclass, field


class VerificationError(Exception):
    """Base class for verify errors."""


class CoincidentVerticesError(VerificationError, ValueError):
    """Two distinct vertices share a coordinate pair."""


class DegenerateEdgeError(VerificationError, ValueError):
    """An edge has coincident endpoints, so its bisector is undefined."""


class TreeRequiredError(VerificationError, ValueError):
    """A tree-only check was given a graph with a cycle."""


@dataclass(frozen=True)
class Violation:
    """One failed greedy condition.

    For the pairwise check `source` has no neighbor closer to `target`; margin is
    d(s, t) - min over neighbors u of d(u, t). For the half-plane check `edge` is
    the directed edge (u, v), `source` the witness on u's side and `target` = v;
    margin is d(w, v) - d(w, u).
    """
    source: str
    target: str
    margin: float
    edge: tuple[str, str] | None = None

    def to_dict(self) -> dict:
        row = {"source": self.source, "target": self.target, "margin": self.margin}
        if self.edge is not None:
            row["edge"] = list(self.edge)
        return row


@dataclass(frozen=True)
class VerificationReport:
    check: str
    exact: bool
    tolerance: float
    min_margin: float
    failures: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.failures

    def relative_margin(self, diameter: float) -> float:
        """min_margin / diameter, the scale-free figure used for acceptance."""
        if diameter <= 0 or math.isinf(self.min_margin):
            return self.min_margin
        return self.min_margin / diameter

    def to_dict(self, max_failures: int = 50) -> dict:
        return {
            "check": self.check,
            "passed": self.passed,
            "exact": self.exact,
            "tolerance": self.tolerance,
            "min_margin": None if math.isinf(self.min_margin) else self.min_margin,
            "failure_count": len(self.failures),
            "failures": [f.to_dict() for f in self.failures[:max_failures]],
        }

    def summary(self) -> str:
        if self.passed:
            return f"✅ {self.check}: passed, min margin {self.min_margin:.3e}"
        worst = min(self.failures, key=lambda f: f.margin)
        return (
            f"❌ {self.check}: {len(self.failures)} violations, worst {worst.source}->{worst.target} "
            f"margin {worst.margin:.3e}"
        )
