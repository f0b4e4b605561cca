"""Exact angles in degrees.

    Every opening-angle supremum is a dyadic rational number of degrees, so
    angles are kept as Fractions until layout converts them to floats.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class ClassificationError(Exception):
    """Base class for angle-classify errors."""


class InvalidAngleError(ClassificationError, ValueError):
    """An ExactAngle that violates its invariants."""


class SignNote(Enum):
    """Whether the supremum of opening angles is positive."""
    POSITIVE = "positive"
    NON_POSITIVE = "non_positive"


@dataclass(frozen=True)
class ExactAngle:
    """A rational number of degrees in [0, 180].

    attained=False is the "supremum only" marker: every smaller angle can be
    realized, the value itself cannot. Only 180 (a single edge) is attained.
    NON_POSITIVE stands for a rooted tree that cannot be drawn with an open angle.
    """
    value: Fraction
    attained: bool = False
    sign_note: SignNote = SignNote.POSITIVE

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if not 0 <= self.value <= 180:
            raise InvalidAngleError(f"angle {self.value} outside [0, 180]")
        if self.sign_note is SignNote.NON_POSITIVE:
            if self.value != 0 or self.attained:
                raise InvalidAngleError("a non-positive angle carries value 0 and attained=False")
        elif self.value == 0:
            raise InvalidAngleError("a positive angle needs a value above 0")
        if self.attained and self.value != 180:
            raise InvalidAngleError(f"only 180 can be attained, got {self.value}")

    @classmethod
    def of(cls, value: Fraction | int | str) -> "ExactAngle":
        """Positive angle; attained exactly when the value is 180."""
        value = Fraction(value)
        return cls(value=value, attained=value == 180)

    @classmethod
    def non_positive(cls) -> "ExactAngle":
        return cls(value=Fraction(0), attained=False, sign_note=SignNote.NON_POSITIVE)

    @property
    def is_positive(self) -> bool:
        return self.sign_note is SignNote.POSITIVE

    def __str__(self) -> str:
        if not self.is_positive:
            return "<=0"
        text = format_degrees(self.value)
        return text if self.attained else f"{text}-"


def format_degrees(value: Fraction) -> str:
    """Exact decimal text for dyadic rationals (e.g. 90.9375), 'p/q' otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    fives = 0
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    scaled = value * 10**digits
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled.numerator), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".")


def parse_degrees(text: str) -> Fraction:
    """Parse '105', '90.9375' or '525/8' into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidAngleError(f"cannot read '{text}' as an angle") from None
