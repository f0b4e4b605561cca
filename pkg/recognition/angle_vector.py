"""Recognition from opening-angle vectors.

    d <= 4:  drawable iff the angles sum to more than (d - 2) * 180.
    d == 5:  dispatch on how many entries equal 180
        none                      sum > 540
        three or more             phi_3 + phi_4 > 120
        exactly two               phi_2 + phi_3 + phi_4 > 240
        exactly one               (phi_1..phi_4) lies in one of the ranged rows I..XI
    d >= 6:  never drawable.

    All comparisons are strict and exact on the suprema; whether the supremum
    is attained never changes the answer.
"""

from dataclasses import dataclass
from fractions import Fraction

from opening_angles import range_label

from .decision import AngleVector, Decision, NonPositiveAngleError, Rule


@dataclass(frozen=True)
class RangeCell:
    """One cell of a ranged row: an interval with open/closed ends."""
    lower: Fraction
    lower_closed: bool
    upper: Fraction
    upper_closed: bool

    def contains(self, value: Fraction) -> bool:
        above = value >= self.lower if self.lower_closed else value > self.lower
        below = value <= self.upper if self.upper_closed else value < self.upper
        return above and below

    def __str__(self) -> str:
        return range_label(self.lower, self.lower_closed, self.upper, self.upper_closed)


def _at(value: str) -> RangeCell:
    v = Fraction(value)
    return RangeCell(v, True, v, True)


def _closed(lower: str, upper: str) -> RangeCell:
    return RangeCell(Fraction(lower), True, Fraction(upper), True)


def _half_open(lower: str, upper: str) -> RangeCell:
    return RangeCell(Fraction(lower), False, Fraction(upper), True)


# ============================================================================
# DEGREE-5 RANGED ROWS (phi_0 = 180, phi_1..phi_4 below 180, sorted)
# ============================================================================

DEGREE_FIVE_ROWS: dict[str, tuple[RangeCell, RangeCell, RangeCell, RangeCell]] = {
    "I": (_at("120"), _at("120"), _at("120"), _closed("33.75", "120")),
    "II": (_at("120"), _at("120"), _at("105"), _closed("45", "105")),
    "III": (_at("120"), _at("120"), _at("97.5"), _closed("46.875", "97.5")),
    "IV": (_at("120"), _at("120"), _at("93.75"), _closed("48.75", "93.75")),
    "V": (_at("120"), _at("120"), _half_open("90", "91.875"), _closed("52.5", "91.875")),
    "VI": (_at("120"), _at("105"), _closed("93.75", "105"), _closed("60", "105")),
    "VII": (_at("120"), _half_open("90", "105"), _half_open("90", "105"), _half_open("90", "105")),
    "VIII": (_at("105"), _closed("97.5", "105"), _half_open("90", "105"), _half_open("90", "105")),
    "IX": (_at("105"), _at("93.75"), _at("93.75"), _half_open("90", "93.75")),
    "X": (_at("105"), _at("93.75"), _at("91.875"), _at("91.875")),
    "XI": (_at("97.5"), _at("97.5"), _at("97.5"), _closed("90.9375", "97.5")),
}


def match_degree_five_row(values: tuple[Fraction, Fraction, Fraction, Fraction]) -> str | None:
    """First ranged row (in order I..XI) containing the sorted tail vector, or None."""
    for row, cells in DEGREE_FIVE_ROWS.items():
        if all(cell.contains(v) for cell, v in zip(cells, values)):
            return row
    return None


def recognize_angle_vector(vector: AngleVector) -> Decision:
    """Decide greedy-drawability at a vertex from its sorted opening-angle suprema.

    Args:
        vector: Sorted positive suprema of the d rooted subtrees

    Returns:
        Decision with the deciding rule and its witness

    Raises:
        NonPositiveAngleError: Some entry has no open angle
    """
    if any(not a.is_positive for a in vector.values):
        raise NonPositiveAngleError("angle vectors must only hold positive suprema")

    d = vector.d
    phi = vector.degrees
    if d > 5:
        return Decision(False, Rule.DEGREE_BOUND, {"degree": d}, angles=vector)

    if d <= 4:
        total, bound = vector.total(), Fraction(180 * (d - 2))
        return Decision(total > bound, Rule.ANGLE_SUM, {"sum": total, "bound": bound}, angles=vector)

    full = sum(1 for v in phi if v == 180)
    if full == 0:
        total, bound = vector.total(), Fraction(540)
        return Decision(total > bound, Rule.CASE_NONMAX, {"sum": total, "bound": bound}, angles=vector)
    if full >= 3:
        total, bound = phi[3] + phi[4], Fraction(120)
        return Decision(total > bound, Rule.CASE_180_180_180, {"sum": total, "bound": bound}, angles=vector)
    if full == 2:
        total, bound = phi[2] + phi[3] + phi[4], Fraction(240)
        return Decision(total > bound, Rule.CASE_180_180, {"sum": total, "bound": bound}, angles=vector)

    row = match_degree_five_row(phi[1:])
    return Decision(row is not None, Rule.DEGREE_FIVE_ROW, {"row": row}, angles=vector)
