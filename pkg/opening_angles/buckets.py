"""Angle buckets: the rows of the classification table of opening angles.

    Every supremum above 7.5 degrees falls into exactly one of sixteen ranges;
    everything at or below 7.5 degrees shares a catch-all bucket. The families
    listed per bucket are documentation and test data; bucketing itself only
    looks at the exact value.
"""

from dataclasses import dataclass
from fractions import Fraction

from .angles import ClassificationError, ExactAngle, format_degrees


class UnlistedAngleError(ClassificationError, ValueError):
    """A positive angle above 7.5 degrees that is not the supremum of any rooted tree."""


@dataclass(frozen=True)
class AngleBucket:
    """A range of angle values with open/closed ends."""
    label: str
    lower: Fraction
    lower_closed: bool
    upper: Fraction
    upper_closed: bool
    families: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lower", Fraction(self.lower))
        object.__setattr__(self, "upper", Fraction(self.upper))
        if self.lower > self.upper:
            raise ClassificationError(f"bucket {self.label}: lower bound above upper bound")

    def contains(self, value: Fraction) -> bool:
        above = value >= self.lower if self.lower_closed else value > self.lower
        below = value <= self.upper if self.upper_closed else value < self.upper
        return above and below

    @property
    def is_point(self) -> bool:
        return self.lower == self.upper

    def __str__(self) -> str:
        return self.label


def range_label(lower: Fraction, lower_closed: bool, upper: Fraction, upper_closed: bool) -> str:
    """Interval text such as '(45, 60)', '[33.75, 120]' or '120' for a point."""
    if lower == upper:
        return format_degrees(upper)
    left = "[" if lower_closed else "("
    right = "]" if upper_closed else ")"
    return f"{left}{format_degrees(lower)}, {format_degrees(upper)}{right}"


def _point(value: str, families: tuple[str, ...]) -> AngleBucket:
    v = Fraction(value)
    return AngleBucket(f"={format_degrees(v)}°", v, True, v, True, families)


def _span(lower: str, upper: str, upper_closed: bool, families: tuple[str, ...]) -> AngleBucket:
    lo, hi = Fraction(lower), Fraction(upper)
    relation = "≤" if upper_closed else "<"
    label = f"{format_degrees(lo)}° < · {relation} {format_degrees(hi)}°"
    return AngleBucket(label, lo, False, hi, upper_closed, families)


# ============================================================================
# CLASSIFICATION TABLE
# ============================================================================

ANGLE_BUCKETS: tuple[AngleBucket, ...] = (
    _point("180", ("A",)),
    _point("120", ("B_1",)),
    _point("105", ("B_2",)),
    _span("90", "97.5", True, ("B_n (n>=3)",)),
    _point("60", ("C_{0,1}", "C_{1,1}", "D_{1,1,0}")),
    _span("45", "60", False, ("C_{k,1} (k>=2)",)),
    _point("45", ("D_{1,2,0}",)),
    _point("37.5", ("D_{1,3,0}", "E_{1,1,0}")),
    _span("30", "33.75", True, ("D_{1,l,0} (l>=4)",)),
    _point("30", ("C_{0,2}", "C_{1,2}", "D_{2,2,0}", "D_{1,1,1}", "E_{1,2,0}")),
    _span("22.5", "26.25", True, ("C_{k,2} (k>=2)", "E_{1,l,0} (l>=3)")),
    _span("15", "22.5", True, ("D_{1,l,1} (l>=2)", "D_{2,l,0} (l>=3)", "E_{1,1,1}", "E_{2,2,0}")),
    _point("15", ("C_{0,3}", "C_{1,3}", "D_{3,3,0}", "D_{2,2,1}", "D_{1,1,2}", "E_{2,3,0}", "E_{1,2,1}")),
    _point("13.125", ("C_{2,3}", "E_{2,4,0}", "E_{1,3,1}")),
    _span("11.25", "13.125", False, ("C_{k,3} (k>=3)", "E_{2,l,0} (l>=5)", "E_{1,l,1} (l>=4)")),
    _span("7.5", "11.25", True, (
        "D_{3,l,0} (l>=4)", "D_{2,l,1} (l>=3)", "D_{1,l,2} (l>=2)", "E_{3,3,0}", "E_{2,2,1}", "E_{1,1,2}",
    )),
    AngleBucket("≤7.5°", Fraction(0), False, Fraction(15, 2), True, ("all remaining types",)),
)

CATCH_ALL_BUCKET = ANGLE_BUCKETS[-1]


def angle_bucket(angle: ExactAngle | Fraction | int) -> AngleBucket:
    """The classification-table row containing a positive angle.

    Args:
        angle: Positive ExactAngle (or a bare value in degrees)

    Returns:
        The unique bucket whose range contains the value

    Raises:
        UnlistedAngleError: The value is above 7.5 but matches no row, or is not positive
    """
    if isinstance(angle, ExactAngle):
        if not angle.is_positive:
            raise UnlistedAngleError("non-positive angles have no bucket")
        value = angle.value
    else:
        value = Fraction(angle)
    for bucket in ANGLE_BUCKETS:
        if bucket.contains(value):
            return bucket
    raise UnlistedAngleError(f"{format_degrees(value)} is not an opening-angle supremum above 7.5")
