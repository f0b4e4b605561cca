"""Rational interval enclosures of pi and of sine in degrees.

    pi comes from Machin's formula, pi = 16 atan(1/5) - 4 atan(1/239), whose
    alternating series give exact rational lower and upper partial sums. Sine
    on [0, 90] degrees uses the alternating Taylor series at an outward-rounded
    radian argument; sine is increasing there, so an interval of degrees maps
    to [sin(low end) lower bound, sin(high end) upper bound]. Every bound is
    rounded outward onto a 10^-p grid to keep the rationals small.

    To test this module run: uv run -m certification.intervals
"""

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from settings import CONFIG, PI_WIDTH

ZERO = Fraction(0)
ONE = Fraction(1)


class IntervalError(ValueError):
    """Malformed interval or argument outside the supported range."""
    pass


def _floor_to(x: Fraction, digits: int) -> Fraction:
    scale = 10**digits
    return Fraction(math.floor(x * scale), scale)


def _ceil_to(x: Fraction, digits: int) -> Fraction:
    scale = 10**digits
    return Fraction(math.ceil(x * scale), scale)


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi] with rational ends."""
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise IntervalError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value) -> "RationalInterval":
        v = Fraction(value)
        return cls(v, v)

    @classmethod
    def of(cls, lo, hi) -> "RationalInterval":
        return cls(Fraction(lo), Fraction(hi))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def sign(self) -> int:
        """+1 or -1 when zero is excluded, else 0."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def __add__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other: "RationalInterval") -> "RationalInterval":
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RationalInterval(min(products), max(products))

    def rounded(self, digits: int) -> "RationalInterval":
        """Outward rounding onto the 10^-digits grid."""
        return RationalInterval(_floor_to(self.lo, digits), _ceil_to(self.hi, digits))

    def __str__(self) -> str:
        return f"[{float(self.lo):.15g}, {float(self.hi):.15g}]"


def product(intervals: Iterable[RationalInterval]) -> RationalInterval:
    """Product of intervals (exact on the rational ends)."""
    result = RationalInterval.point(ONE)
    for interval in intervals:
        result = result * interval
    return result


# ============================================================================
# PI
# ============================================================================

def _atan_inverse_bounds(n: int, digits: int) -> tuple[Fraction, Fraction]:
    """Lower and upper partial sums of atan(1/n) = sum (-1)^k / ((2k+1) n^(2k+1))."""
    target = Fraction(1, 10 ** (digits + 2))
    total = ZERO
    k = 0
    while True:
        term = Fraction(1, (2 * k + 1) * n ** (2 * k + 1))
        total += term if k % 2 == 0 else -term
        if term < target and k % 2 == 1:
            # total ends on a subtracted term, so it is a lower bound and adding back is an upper one
            return total, total + term
        k += 1


@lru_cache(maxsize=8)
def pi_enclosure(digits: int = 45) -> RationalInterval:
    """Rational enclosure of pi rounded outward to 10^-digits."""
    lo5, hi5 = _atan_inverse_bounds(5, digits)
    lo239, hi239 = _atan_inverse_bounds(239, digits)
    enclosure = RationalInterval(16 * lo5 - 4 * hi239, 16 * hi5 - 4 * lo239).rounded(digits)
    if enclosure.width >= Fraction(PI_WIDTH) and digits >= 41:
        raise IntervalError(f"pi enclosure too wide: {float(enclosure.width)}")
    return enclosure


# ============================================================================
# SINE
# ============================================================================

def _sine_series_bounds(x: Fraction, digits: int) -> tuple[Fraction, Fraction]:
    """Lower and upper Taylor partial sums of sin(x) for 0 <= x <= 2."""
    target = Fraction(1, 10 ** (digits + 2))
    x2 = x * x
    term = x
    total = ZERO
    k = 0
    while True:
        total += term if k % 2 == 0 else -term
        if k % 2 == 1 and term < target:
            return total, total + term
        term = term * x2 / ((2 * k + 2) * (2 * k + 3))
        k += 1


@lru_cache(maxsize=65536)
def sin_enclosure(degrees: Fraction, digits: int | None = None) -> RationalInterval:
    """Enclosure of sin(degrees) for degrees in [0, 180].

    Args:
        degrees: Exact angle in degrees
        digits: Grid of the outward rounding; defaults to enough for the
            configured sine width

    Raises:
        IntervalError: Angle outside [0, 180]
    """
    degrees = Fraction(degrees)
    if not 0 <= degrees <= 180:
        raise IntervalError(f"sine enclosure needs an angle in [0, 180], got {degrees}")
    if digits is None:
        digits = max(30, -int(math.floor(math.log10(CONFIG["sine_width"])))) + 5
    if degrees > 90:
        degrees = 180 - degrees
    if degrees == 0:
        return RationalInterval.point(ZERO)
    if degrees == 90:
        return RationalInterval.point(ONE)

    pi = pi_enclosure(digits + 10)
    rad_lo = _floor_to(degrees * pi.lo / 180, digits + 5)
    rad_hi = _ceil_to(degrees * pi.hi / 180, digits + 5)
    lower, _ = _sine_series_bounds(rad_lo, digits)
    if rad_hi >= pi.lo / 2:
        upper = ONE
    else:
        _, upper = _sine_series_bounds(rad_hi, digits)
    lower = max(ZERO, _floor_to(lower, digits))
    upper = min(ONE, _ceil_to(upper, digits))
    return RationalInterval(lower, upper)


def sin_over(interval: RationalInterval, digits: int | None = None) -> RationalInterval:
    """Enclosure of sine over a degree interval inside [0, 90].

    Raises:
        IntervalError: The interval leaves [0, 90]
    """
    if interval.lo < 0 or interval.hi > 90:
        raise IntervalError(f"monotone sine range needs [0, 90], got [{interval.lo}, {interval.hi}]")
    return RationalInterval(sin_enclosure(interval.lo, digits).lo, sin_enclosure(interval.hi, digits).hi)


def sin_product(angles: Sequence[Fraction], digits: int | None = None) -> RationalInterval:
    """Enclosure of the product of sines of exact angles."""
    return product(sin_enclosure(Fraction(a), digits) for a in angles)


if __name__ == "__main__":
    print(f"pi in {pi_enclosure()}")
    for value in (Fraction(30), Fraction(45), Fraction(105, 4), Fraction(120)):
        enclosure = sin_enclosure(value)
        print(f"sin({value}) in {enclosure} width {float(enclosure.width):.3g}")
