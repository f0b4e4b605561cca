"""Decision records and angle vectors.

    A Decision says whether a graph (or an angle vector) is greedy-drawable and
    which clause of the characterization decided it, with the data that backs
    the answer (sum and bound, a matched range row, a closed 2-cycle...).
"""

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from opening_angles import ExactAngle, TreeType, format_degrees


class RecognitionError(Exception):
    """Base class for recognition errors."""


class NonPositiveAngleError(RecognitionError, ValueError):
    """An angle vector entry without an open angle reached the vector recognizer."""


class Rule(Enum):
    """Clause of the characterization that produced a decision."""
    ANGLE_SUM = "AngleSum"
    CASE_180_180_180 = "Case-180-180-180"
    CASE_180_180 = "Case-180-180"
    CASE_NONMAX = "Case-nonmax"
    DEGREE_FIVE_ROW = "DegreeFiveRow"
    CYCLE_ANGLE_SUM = "CycleAngleSum"
    DEGREE_BOUND = "DegreeBound"
    CLOSED_PAIR = "ClosedPair"


# Rules that can only ever reject
_REJECTING_RULES = {Rule.DEGREE_BOUND, Rule.CLOSED_PAIR}


@dataclass(frozen=True)
class AngleVector:
    """Opening-angle suprema of the d subtrees at a vertex, sorted non-increasing."""
    values: tuple[ExactAngle, ...]

    def __post_init__(self):
        if not self.values:
            raise RecognitionError("an angle vector needs at least one entry")
        vals = [a.value for a in self.values]
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise RecognitionError("angle vector entries must be sorted non-increasing")

    @classmethod
    def of(cls, angles: Iterable[ExactAngle | Fraction | int | str]) -> "AngleVector":
        """Build from angles or bare degree values, sorting them."""
        items = [a if isinstance(a, ExactAngle) else ExactAngle.of(a) for a in angles]
        return cls(tuple(sorted(items, key=lambda a: a.value, reverse=True)))

    @property
    def d(self) -> int:
        return len(self.values)

    @property
    def degrees(self) -> tuple[Fraction, ...]:
        return tuple(a.value for a in self.values)

    def total(self) -> Fraction:
        return sum(self.degrees, Fraction(0))

    def __str__(self) -> str:
        return "(" + ", ".join(format_degrees(v) for v in self.degrees) + ")"


@dataclass(frozen=True)
class Decision:
    """Outcome of a recognition query."""
    drawable: bool
    rule: Rule
    witness: dict[str, Any] | None = None
    angles: AngleVector | None = None
    root: str | None = None
    subtree_types: tuple[TreeType, ...] = field(default=())

    def __post_init__(self):
        if self.drawable and self.rule in _REJECTING_RULES:
            raise RecognitionError(f"rule {self.rule.value} cannot accept")

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready form; exact angles are written as fraction strings."""
        return {
            "drawable": self.drawable,
            "rule": self.rule.value,
            "witness": _jsonable(self.witness),
            "angles": [str(v) for v in self.angles.degrees] if self.angles else None,
            "root": self.root,
            "subtree_types": [str(t) for t in self.subtree_types],
        }


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (ExactAngle, TreeType)):
        return str(value)
    return value
