"""Scalar statistics of rational Dyck paths.

Skew length is exposed through all of its equivalent computations (core
side, peak/valley row lengths, skew inversions, flip skew inversions); the
laser route lives with the laser filling.  All arithmetic is exact.
"""

from __future__ import annotations

from .cores import row_length_filling
from .paths import DyckPath, EAST, NORTH

__all__ = [
    "area",
    "coarea",
    "rank",
    "path_rank",
    "core_rank",
    "skew_length",
    "skew_length_peaks_valleys",
    "skew_inversions",
    "flip_skew_inversions",
    "co_skew_length",
    "dinv",
    "delta",
    "statistics_summary",
]


def area(path: DyckPath) -> int:
    """Number of boxes below the path and above the diagonal."""
    return len(path.positive_hooks())


def coarea(path: DyckPath) -> int:
    """Number of boxes above the path."""
    return path.bounded_partition().size


def path_rank(path: DyckPath) -> int:
    """Number of nonzero rows of the bounded partition."""
    return path.bounded_partition().nonzero_rows


rank = path_rank


def core_rank(path: DyckPath) -> int:
    """Number of rows of the corresponding core; equals the area."""
    return area(path)


def skew_inversions(path: DyckPath) -> int:
    """Pairs (i, j) of north and east levels with n_i > e_j."""
    norths = path.north_levels()
    easts = path.east_levels()
    return sum(1 for n in norths for e in easts if n > e)


def flip_skew_inversions(path: DyckPath) -> int:
    """Pairs (i, j) with n_i + b < e_j - a."""
    norths = path.north_levels()
    easts = path.east_levels()
    a, b = path.a, path.b
    return sum(1 for n in norths for e in easts if n + b < e - a)


def skew_length_peaks_valleys(path: DyckPath) -> int:
    """Sum of row lengths at peaks minus row lengths at valleys."""
    filling = row_length_filling(path)
    points = path.points()
    total = 0
    for i in range(path.length - 1):
        pair = path.steps[i : i + 2]
        x, y = points[i + 1]
        if pair == NORTH + EAST:
            total += filling.value(x, y - 1)
        elif pair == EAST + NORTH:
            total -= filling.value(x, y - 1)
    return total


def skew_length(path: DyckPath) -> int:
    """The skew length statistic (computed via skew inversions)."""
    return skew_inversions(path)


def co_skew_length(path: DyckPath) -> int:
    """(a-1)(b-1)/2 minus the skew length."""
    return (path.a - 1) * (path.b - 1) // 2 - skew_length(path)


def dinv(path: DyckPath) -> int:
    """Boxes B above the path with arm/(leg+1) <= b/a < (arm+1)/leg.

    Ratios are compared by integer cross-multiplication; when leg = 0 the
    right inequality is vacuously true.
    """
    bounded = path.bounded_partition()
    a, b = path.a, path.b
    count = 0
    for i, j in bounded.boxes():
        arm = bounded.arm(i, j)
        leg = bounded.leg(i, j)
        if arm * a <= b * (leg + 1) and (leg == 0 or b * leg < a * (arm + 1)):
            count += 1
    return count


def delta(path: DyckPath) -> int:
    """Number of reading-word levels strictly below a + b."""
    bound = path.a + path.b
    return sum(1 for v in path.reading_word() if v < bound)


def statistics_summary(path: DyckPath) -> dict[str, int]:
    """All statistics in the documented JSON key order."""
    return {
        "area": area(path),
        "coarea": coarea(path),
        "rank": rank(path),
        "sl": skew_length(path),
        "slp": co_skew_length(path),
        "dinv": dinv(path),
        "delta": delta(path),
    }
