"""Regenerating the angle-type tables.

    Every multiset of d classification buckets is tested at the buckets' upper
    values. Accepted multisets that share their first d - 1 buckets are merged
    into one row whose last cell is a range, which is how the printed angle-type
    tables read, e.g. (180, 120, 60, (0, 60]).
"""

import logging
from collections.abc import Sequence
from itertools import combinations_with_replacement

from opening_angles import ANGLE_BUCKETS, AngleBucket, ExactAngle, range_label

from .angle_vector import recognize_angle_vector
from .decision import AngleVector

logger = logging.getLogger(__name__)

# buckets are listed from the largest value down
BUCKETS: tuple[AngleBucket, ...] = ANGLE_BUCKETS

FULL_RANGE = AngleBucket("(0, 180]", 0, False, 180, True)


def bucket_vector(indices: Sequence[int]) -> AngleVector:
    """Angle vector at the upper values of the given bucket indices."""
    return AngleVector.of(ExactAngle.of(BUCKETS[i].upper) for i in indices)


def accepted_bucket_tuples(d: int, first: int | None = None) -> list[tuple[int, ...]]:
    """Sorted bucket-index tuples (largest value first) accepted at their upper values.

    Args:
        d: Vertex degree, 1..5
        first: Only tuples whose first index is `first` (lets callers fan out)
    """
    accepted = []
    for combo in combinations_with_replacement(range(len(BUCKETS)), d):
        if first is not None and combo[0] != first:
            continue
        if recognize_angle_vector(bucket_vector(combo)).drawable:
            accepted.append(combo)
    return accepted


def compress_rows(d: int, accepted: Sequence[tuple[int, ...]]) -> list[tuple[AngleBucket, ...]]:
    """Merge accepted bucket tuples into ranged rows.

    Tuples sharing a prefix whose last buckets form a contiguous run starting at
    the prefix's own last bucket become one row with the range
    (lowest accepted lower end, upper end of the prefix's last bucket]. If every
    multiset is accepted the single all-positive row is returned.
    """
    total = sum(1 for _ in combinations_with_replacement(range(len(BUCKETS)), d))
    if len(accepted) == total:
        return [tuple(FULL_RANGE for _ in range(d))]

    by_prefix: dict[tuple[int, ...], list[int]] = {}
    for combo in sorted(accepted):
        by_prefix.setdefault(combo[:-1], []).append(combo[-1])

    rows: list[tuple[AngleBucket, ...]] = []
    for prefix, lasts in by_prefix.items():
        head = tuple(BUCKETS[i] for i in prefix)
        start = prefix[-1] if prefix else 0
        contiguous = lasts == list(range(start, start + len(lasts)))
        if not contiguous or len(lasts) == 1:
            rows.extend(head + (BUCKETS[i],) for i in lasts)
            continue
        top, bottom = BUCKETS[lasts[0]], BUCKETS[lasts[-1]]
        merged = AngleBucket(
            range_label(bottom.lower, bottom.lower_closed, top.upper, top.upper_closed),
            bottom.lower,
            bottom.lower_closed,
            top.upper,
            top.upper_closed,
        )
        rows.append(head + (merged,))
    return rows


def enumerate_feasible_combinations(d: int) -> list[tuple[AngleBucket, ...]]:
    """Ranged angle-type rows of drawable bucket combinations at a degree-d vertex.

    Args:
        d: Degree between 1 and 5

    Returns:
        Rows sorted from the largest angles down
    """
    if not 1 <= d <= 5:
        raise ValueError(f"d must be between 1 and 5, got {d}")
    accepted = accepted_bucket_tuples(d)
    rows = compress_rows(d, accepted)
    logger.info(f"✅ d={d}: {len(accepted)} accepted bucket multisets, {len(rows)} rows")
    return rows


def row_labels(row: Sequence[AngleBucket]) -> tuple[str, ...]:
    """Cell texts of a row: '180', '(45, 60)', '(0, 60]'..."""
    return tuple(range_label(c.lower, c.lower_closed, c.upper, c.upper_closed) for c in row)
