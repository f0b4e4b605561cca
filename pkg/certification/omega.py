"""Rigorous enclosures of omega(x) = prod sin(beta_i) - prod sin(gamma_i).

    Over a box inside [0, 90]^(2d) sine is increasing in every coordinate, so

        prod sin(beta_i^-) - prod sin(gamma_i^+) <= omega <= prod sin(beta_i^+) - prod sin(gamma_i^-)

    At a single point the sines are enclosed at growing precision until the
    enclosure of omega excludes zero.

    To test this module run: uv run -m certification.omega
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from settings import CONFIG

from .intervals import IntervalError, RationalInterval, product, sin_enclosure, sin_over
from .reduced_system import Box, CertificationError

logger = logging.getLogger(__name__)

# Decimal digits tried by sign_of_omega_at, doubled until the configured maximum
START_DIGITS = 30


class BoxOutOfRangeError(CertificationError):
    """The box leaves [0, 90] where sine is monotone."""
    pass


class OmegaSign(Enum):
    """Sign of omega at a point"""
    POSITIVE = "positive"
    NEGATIVE = "negative"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class SignReport:
    """Sign with the final enclosure and the digits it was computed at."""
    sign: OmegaSign
    enclosure: RationalInterval
    digits: int

    @property
    def width(self) -> Fraction:
        return self.enclosure.width


def omega_bounds_over_box(box: Box, digits: int | None = None) -> RationalInterval:
    """Enclosure of omega over every point of the box.

    Raises:
        BoxOutOfRangeError: Some variable interval leaves [0, 90]
    """
    if not box.within(0, 90):
        raise BoxOutOfRangeError("omega box bounds need every variable inside [0, 90]")
    try:
        betas = product(sin_over(box.beta(i), digits) for i in range(box.d))
        gammas = product(sin_over(box.gamma(i), digits) for i in range(box.d))
    except IntervalError as e:
        raise BoxOutOfRangeError(str(e)) from e
    return betas - gammas


def omega_enclosure_at(point: Sequence[Fraction], digits: int) -> RationalInterval:
    """Enclosure of omega at an exact point with coordinates in [0, 180]."""
    d = len(point) // 2
    betas = product(sin_enclosure(Fraction(x), digits) for x in point[:d])
    gammas = product(sin_enclosure(Fraction(x), digits) for x in point[d:])
    return betas - gammas


def sign_of_omega_at(point: Sequence, max_digits: int | None = None) -> SignReport:
    """Sign of omega at an exact rational point, refining until decided.

    Args:
        point: beta_0..beta_{d-1}, gamma_0..gamma_{d-1} in degrees
        max_digits: Precision ceiling; the configured sign_max_digits by default

    Returns:
        SignReport; UNDETERMINED when the enclosure still straddles zero at the ceiling
    """
    point = tuple(Fraction(x) for x in point)
    if len(point) % 2:
        raise ValueError(f"omega needs an even number of coordinates, got {len(point)}")
    max_digits = max_digits or CONFIG["sign_max_digits"]
    digits = START_DIGITS
    while True:
        enclosure = omega_enclosure_at(point, digits)
        sign = enclosure.sign()
        if sign > 0:
            return SignReport(OmegaSign.POSITIVE, enclosure, digits)
        if sign < 0:
            return SignReport(OmegaSign.NEGATIVE, enclosure, digits)
        if digits * 2 > max_digits:
            logger.debug(f"omega undecided at {digits} digits, width {float(enclosure.width):.3g}")
            return SignReport(OmegaSign.UNDETERMINED, enclosure, digits)
        digits *= 2


if __name__ == "__main__":
    mirrored = [Fraction(54)] * 10
    report = sign_of_omega_at(mirrored)
    print(f"omega at the symmetric point: {report.sign.value} {report.enclosure}")
