"""Plane geometry on mpmath points, angles in degrees.

    Every layout computation runs on mpmath floats inside the caller's
    working precision; directions are measured counter-clockwise from the
    positive x axis.
"""

from collections.abc import Iterable, Sequence
from fractions import Fraction

import mpmath

Point = tuple[mpmath.mpf, mpmath.mpf]


def mpf_of(x) -> mpmath.mpf:
    """mpmath float of an int, Fraction, float or mpf (Fractions divided at working precision)."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def origin() -> Point:
    return (mpmath.mpf(0), mpmath.mpf(0))


def unit(degrees) -> Point:
    rad = mpmath.radians(mpf_of(degrees))
    return (mpmath.cos(rad), mpmath.sin(rad))


def sind(degrees) -> mpmath.mpf:
    return mpmath.sin(mpmath.radians(mpf_of(degrees)))


def cosd(degrees) -> mpmath.mpf:
    return mpmath.cos(mpmath.radians(mpf_of(degrees)))


def add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def scaled(p: Point, k) -> Point:
    return (p[0] * k, p[1] * k)


def norm(p: Point) -> mpmath.mpf:
    return mpmath.sqrt(p[0] * p[0] + p[1] * p[1])


def dist(p: Point, q: Point) -> mpmath.mpf:
    return norm(sub(p, q))


def rotate(p: Point, degrees) -> Point:
    c, s = unit(degrees)
    return (p[0] * c - p[1] * s, p[0] * s + p[1] * c)


def wrap(degrees) -> mpmath.mpf:
    """Angle reduced to [0, 360)."""
    return mpf_of(degrees) % 360


def signed_delta(a, b) -> mpmath.mpf:
    """b - a reduced to (-180, 180]."""
    delta = (mpf_of(b) - mpf_of(a)) % 360
    return delta - 360 if delta > 180 else delta


def direction(p: Point, q: Point) -> mpmath.mpf:
    """Direction of q - p in [0, 360)."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    return wrap(mpmath.degrees(mpmath.atan2(dy, dx)))


def arc_of(directions: Iterable) -> tuple[mpmath.mpf, mpmath.mpf] | None:
    """Smallest arc (lo, hi) with hi >= lo holding every direction; None for no directions.

    The arc starts right after the largest cyclic gap, so lo lies in [0, 360)
    and hi may exceed 360.
    """
    ordered = sorted(wrap(d) for d in directions)
    if not ordered:
        return None
    n = len(ordered)
    gaps = [(ordered[(i + 1) % n] - ordered[i]) % 360 for i in range(n)]
    if n == 1:
        return ordered[0], ordered[0]
    widest = max(range(n), key=lambda i: gaps[i])
    lo = ordered[(widest + 1) % n]
    hi = ordered[widest]
    if hi < lo:
        hi += 360
    return lo, hi


def wedge_at(p: Point, prev: Point, nxt: Point) -> tuple[mpmath.mpf, mpmath.mpf]:
    """(bisector, width) of the angle at p between the rays towards prev and nxt.

    The returned wedge is the one below 180 degrees (the interior angle of a
    convex corner).
    """
    a, b = direction(p, prev), direction(p, nxt)
    delta = signed_delta(a, b)
    return wrap(a + delta / 2), abs(delta)


def centroid(points: Sequence[Point]) -> Point:
    n = len(points)
    return (sum(p[0] for p in points) / n, sum(p[1] for p in points) / n)
