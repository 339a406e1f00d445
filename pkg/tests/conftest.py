"""Shared fixtures and independent oracles for the test suite.

Oracles here deliberately avoid the library's own algorithms: enumeration
is brute force over all step words, the conjugate oracle is the geometric
cyclic-shift-and-rotate procedure, and laser crossings are re-derived with
exact rational intersection tests.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import pytest

from rational_dyck import DyckPath, make_path
from rational_dyck.paths import EAST, NORTH


@pytest.fixture
def running() -> DyckPath:
    """The worked (5,8) example used throughout the documentation."""
    return make_path(5, 8, "NNNENEEENEEEE")


def coprime_pairs(max_sum: int, min_dim: int = 1):
    """All (a, b) with gcd 1, a + b <= max_sum and both dims >= min_dim."""
    out = []
    for total in range(2 * min_dim, max_sum + 1):
        for a in range(min_dim, total - min_dim + 1):
            b = total - a
            if b >= min_dim and math.gcd(a, b) == 1:
                out.append((a, b))
    return out


def brute_force_paths(a: int, b: int) -> set[str]:
    """Every valid step word, by filtering all C(a+b, a) candidates."""
    words = set()
    for north_positions in combinations(range(a + b), a):
        word = [EAST] * (a + b)
        for i in north_positions:
            word[i] = NORTH
        x = y = 0
        ok = True
        for s in word:
            x, y = (x, y + 1) if s == NORTH else (x + 1, y)
            if a * x > b * y:
                ok = False
                break
        if ok:
            words.add("".join(word))
    return words


def geometric_conjugate(path: DyckPath) -> DyckPath:
    """Cyclic-shift below the diagonal, then rotate half a turn.

    Shifting the word to start at its maximal-level point puts every other
    point strictly below the diagonal; reversing the shifted word is the
    half-turn rotation.
    """
    levels = path.levels()[:-1]
    cut = levels.index(max(levels))
    shifted = path.steps[cut:] + path.steps[:cut]
    # check the shifted path is strictly below the diagonal in the interior
    x = y = 0
    for s in shifted[:-1]:
        x, y = (x, y + 1) if s == NORTH else (x + 1, y)
        assert y * path.b - x * path.a < 0
    return DyckPath(path.a, path.b, shifted[::-1])


def laser_value_by_intersection(path: DyckPath, col: int, row: int) -> int:
    """Crossing count of the slope-a/b line through the box's SE corner,
    via exact rational intersections with each north step of the path."""
    a, b = path.a, path.b
    cx, cy = col + 1, row
    slope = Fraction(a, b)
    count = 0
    points = path.points()
    for i, s in enumerate(path.steps):
        if s != NORTH:
            continue
        x, y = points[i]
        line_y = cy + slope * (x - cx)
        if y < line_y < y + 1:
            count += 1
    return count
