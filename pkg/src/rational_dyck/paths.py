"""Rational Dyck paths, partitions and permutations.

An (a,b)-Dyck path is a word of a north and b east steps from (0,0) to
(b,a) whose lattice points (x,y) all satisfy a*x <= b*y, for coprime a, b.
This module owns the path type, its level/word data, enumeration, and the
structural operations (conjugate, flip, reverse, star product, predecessor)
that everything else builds on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import (
    AmbiguousMaxLevel,
    AreaZero,
    BelowDiagonal,
    DoesNotFitAboveDiagonal,
    NotACycle,
    NotCoprime,
    NotSquareCase,
    PathParseError,
    WrongDescentCount,
    WrongStepCounts,
)

NORTH = "N"
EAST = "E"


def box_value(a: int, b: int, col: int, row: int) -> int:
    """Grid filling of the box with lower-left corner (col, row).

    Equals the level of the box's southeast corner, so the box lies above
    the main diagonal exactly when the value is positive.
    """
    return row * b - (col + 1) * a


# ---------------------------------------------------------------------------
# Partitions


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of non-negative integers.

    Trailing zeros are kept and significant: fixed-length contexts (such as
    the length-a partition bounded by a path) rely on them.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def nonzero_rows(self) -> int:
        return sum(1 for p in self.parts if p > 0)

    def trimmed(self) -> "Partition":
        """Drop trailing zero parts."""
        return Partition(tuple(p for p in self.parts if p > 0))

    def padded(self, length: int) -> "Partition":
        """Append zero parts up to the requested length."""
        if len(self.parts) > length:
            raise ValueError(f"{self.parts} longer than {length}")
        return Partition(self.parts + (0,) * (length - len(self.parts)))

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram (no trailing zeros)."""
        nz = [p for p in self.parts if p > 0]
        if not nz:
            return Partition(())
        return Partition(tuple(sum(1 for p in nz if p > j) for j in range(nz[0])))

    def boxes(self) -> Iterator[tuple[int, int]]:
        """(row, col) pairs of the Young diagram, English notation."""
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield i, j

    def arm(self, i: int, j: int) -> int:
        return self.parts[i] - j - 1

    def leg(self, i: int, j: int) -> int:
        return sum(1 for p in self.parts if p > j) - i - 1

    def hook(self, i: int, j: int) -> int:
        """Hook length of box (row i, col j), both 0-indexed."""
        return self.arm(i, j) + self.leg(i, j) + 1

    def leading_hooks(self) -> tuple[int, ...]:
        """First-column hook lengths, largest first."""
        return tuple(self.hook(i, 0) for i, p in enumerate(self.parts) if p > 0)

    def first_row_hooks(self) -> tuple[int, ...]:
        return tuple(self.hook(0, j) for j in range(self.parts[0])) if self.parts else ()


# ---------------------------------------------------------------------------
# Permutations


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n} stored in one-line notation."""

    one_line: tuple[int, ...]

    def __post_init__(self):
        one_line = tuple(int(v) for v in self.one_line)
        object.__setattr__(self, "one_line", one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise ValueError(f"not a permutation of 1..{len(one_line)}: {one_line}")

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycle(cls, cycle, n: int | None = None) -> "Permutation":
        """Permutation acting as the given cycle, fixing everything else."""
        cycle = tuple(cycle)
        size = max(cycle) if n is None else n
        images = list(range(1, size + 1))
        for pos, v in enumerate(cycle):
            images[v - 1] = cycle[(pos + 1) % len(cycle)]
        return cls(tuple(images))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for i, v in enumerate(self.one_line, start=1):
            images[v - 1] = i
        return Permutation(tuple(images))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def conjugated_by(self, rho: "Permutation") -> "Permutation":
        """rho * self * rho^{-1}."""
        return rho.compose(self).compose(rho.inverse())

    def is_single_cycle(self) -> bool:
        seen = 1
        j = self(1)
        while j != 1:
            seen += 1
            j = self(j)
        return seen == self.n

    def cycle_from(self, start: int = 1) -> tuple[int, ...]:
        """Cycle notation of a full-cycle permutation, starting at `start`."""
        out = [start]
        j = self(start)
        while j != start:
            out.append(j)
            j = self(j)
        if len(out) != self.n:
            raise NotACycle(f"{self.one_line} has more than one cycle")
        return tuple(out)

    def right_cyclic_descents(self) -> tuple[int, ...]:
        """Positions i with sigma_i > sigma_{i+1}, index a+b wrapping to 1."""
        n = self.n
        return tuple(
            i for i in range(1, n + 1) if self.one_line[i - 1] > self.one_line[i % n]
        )

    def right_cyclic_ascents(self) -> tuple[int, ...]:
        descents = set(self.right_cyclic_descents())
        return tuple(i for i in range(1, self.n + 1) if i not in descents)

    def exceedance_positions(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self(i) > i)

    def exceedance_values(self) -> tuple[int, ...]:
        return tuple(self(i) for i in self.exceedance_positions())


def standardize(values) -> Permutation:
    """Relative-order permutation of a sequence of distinct integers."""
    values = tuple(values)
    if len(set(values)) != len(values):
        raise ValueError(f"values not distinct: {values}")
    rank = {v: i for i, v in enumerate(sorted(values), start=1)}
    return Permutation(tuple(rank[v] for v in values))


def rotation_cycle(n: int, i: int, j: int) -> Permutation:
    """The cycle (i, i+1, ..., j) inside the symmetric group on 1..n."""
    if not 1 <= i <= j <= n:
        raise ValueError(f"need 1 <= {i} <= {j} <= {n}")
    return Permutation.from_cycle(tuple(range(i, j + 1)), n)


# ---------------------------------------------------------------------------
# Dyck paths


@dataclass(frozen=True)
class DyckPath:
    """Lattice path of a norths and b easts staying weakly above y = (a/b)x."""

    a: int
    b: int
    steps: str

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise ValueError("dimensions must be integers")
        if self.a < 1 or self.b < 1:
            raise ValueError("dimensions must be positive")
        for i, s in enumerate(self.steps):
            if s not in (NORTH, EAST):
                raise PathParseError(self.steps, i)
        if math.gcd(self.a, self.b) != 1:
            raise NotCoprime(f"gcd({self.a}, {self.b}) != 1")
        if (
            len(self.steps) != self.a + self.b
            or self.steps.count(NORTH) != self.a
            or self.steps.count(EAST) != self.b
        ):
            raise WrongStepCounts(
                f"need {self.a} N and {self.b} E steps, got {self.steps!r}"
            )
        x = y = 0
        for s in self.steps:
            if s == NORTH:
                y += 1
            else:
                x += 1
            if self.a * x > self.b * y:
                raise BelowDiagonal((x, y))

    def __str__(self) -> str:
        return self.steps

    @property
    def length(self) -> int:
        return self.a + self.b

    def points(self) -> tuple[tuple[int, int], ...]:
        """The a+b+1 lattice points visited, in path order."""
        return _points(self)

    def visits(self, x: int, y: int) -> bool:
        return (x, y) in self.points()

    def levels(self) -> tuple[int, ...]:
        """Level y*b - x*a of every lattice point, in path order."""
        return _levels(self)

    def reading_word(self) -> tuple[int, ...]:
        """Levels read southwest to northeast, final 0 excluded."""
        return self.levels()[:-1]

    def reverse_reading_word(self) -> tuple[int, ...]:
        """Levels read northeast to southwest, final 0 excluded."""
        return tuple(reversed(self.levels()))[:-1]

    def north_levels(self) -> tuple[int, ...]:
        """Levels of points starting north steps, in decreasing order."""
        lv = self.levels()
        return tuple(
            sorted((lv[i] for i, s in enumerate(self.steps) if s == NORTH), reverse=True)
        )

    def east_levels(self) -> tuple[int, ...]:
        """Levels of points starting east steps, in decreasing order."""
        lv = self.levels()
        return tuple(
            sorted((lv[i] for i, s in enumerate(self.steps) if s == EAST), reverse=True)
        )

    def north_columns(self) -> tuple[int, ...]:
        """Column of the north step in each row, bottom row first."""
        out = []
        x = 0
        for s in self.steps:
            if s == NORTH:
                out.append(x)
            else:
                x += 1
        return tuple(out)

    def east_rows(self) -> tuple[int, ...]:
        """Height of the east step in each column, leftmost column first."""
        out = []
        y = 0
        for s in self.steps:
            if s == NORTH:
                y += 1
            else:
                out.append(y)
        return tuple(out)

    def bounded_partition(self) -> Partition:
        """Partition formed by the boxes above the path (trailing zeros dropped)."""
        cols = self.north_columns()
        return Partition(tuple(reversed(cols))).trimmed()

    def positive_hooks(self) -> tuple[int, ...]:
        """Positive grid values of boxes below the path, largest first.

        These are the first-column hook lengths of the corresponding core.
        """
        return _positive_hooks(self)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "steps": self.steps}

    @classmethod
    def from_json(cls, data: dict) -> "DyckPath":
        return cls(int(data["a"]), int(data["b"]), str(data["steps"]))


@lru_cache(maxsize=None)
def _points(path: DyckPath) -> tuple[tuple[int, int], ...]:
    pts = [(0, 0)]
    x = y = 0
    for s in path.steps:
        if s == NORTH:
            y += 1
        else:
            x += 1
        pts.append((x, y))
    return tuple(pts)


@lru_cache(maxsize=None)
def _levels(path: DyckPath) -> tuple[int, ...]:
    return tuple(y * path.b - x * path.a for x, y in _points(path))


@lru_cache(maxsize=None)
def _positive_hooks(path: DyckPath) -> tuple[int, ...]:
    out = []
    for row, col0 in enumerate(path.north_columns()):
        for col in range(col0, path.b):
            v = box_value(path.a, path.b, col, row)
            if v > 0:
                out.append(v)
    return tuple(sorted(out, reverse=True))


def make_path(a: int, b: int, steps: str) -> DyckPath:
    """Validated constructor for :class:`DyckPath`."""
    return DyckPath(a, b, steps)


def lowest_path(a: int, b: int) -> DyckPath:
    """The area-0 path hugging the diagonal."""
    cols = tuple(j * b // a for j in range(a))
    return _path_from_north_columns(a, b, cols)


def full_path(a: int, b: int) -> DyckPath:
    """N^a E^b, the path containing every box above the diagonal."""
    return DyckPath(a, b, NORTH * a + EAST * b)


def _path_from_north_columns(a: int, b: int, cols) -> DyckPath:
    cols = tuple(cols)
    word = []
    x = 0
    for c in cols:
        if c < x:
            raise ValueError(f"north columns not monotone: {cols}")
        word.append(EAST * (c - x))
        word.append(NORTH)
        x = c
    word.append(EAST * (b - x))
    return DyckPath(a, b, "".join(word))


def path_from_bounded_partition(a: int, b: int, parts) -> DyckPath:
    """The path whose bounded partition is the given one (length <= a)."""
    if isinstance(parts, Partition):
        parts = parts.parts
    parts = tuple(int(p) for p in parts)
    if len(parts) > a:
        raise DoesNotFitAboveDiagonal(f"{parts} has more than {a} rows")
    padded = Partition(parts).padded(a)
    cols = tuple(reversed(padded.parts))
    for row, col in enumerate(cols):
        if a * col > b * row or col > b:
            raise DoesNotFitAboveDiagonal(f"row of length {col} at height {row}")
    return _path_from_north_columns(a, b, cols)


def path_from_hooks(a: int, b: int, hooks) -> DyckPath:
    """The path whose set of positive hooks is exactly `hooks`."""
    wanted = frozenset(int(h) for h in hooks)
    if any(h <= 0 for h in wanted):
        raise ValueError("hooks must be positive")
    cols = []
    for row in range(a):
        col = 0
        while True:
            v = box_value(a, b, col, row)
            if v <= 0 or v in wanted:
                break
            col += 1
        cols.append(col)
    path = _path_from_north_columns(a, b, cols)
    if frozenset(path.positive_hooks()) != wanted:
        raise ValueError(f"{sorted(wanted)} is not a valid hook set for ({a},{b})")
    return path


def sigma(path: DyckPath) -> Permutation:
    """Reading permutation: standardization of the reading word."""
    return standardize(path.reading_word())


def tau(path: DyckPath) -> Permutation:
    """Reverse reading permutation: standardization of the reverse word."""
    return standardize(path.reverse_reading_word())


def gamma(path: DyckPath) -> Permutation:
    """The cycle whose cycle notation, started at 1, lists sigma's one-line."""
    return Permutation.from_cycle(sigma(path).one_line)


def path_from_permutation(perm: Permutation, a: int, b: int) -> DyckPath:
    """Rebuild the path whose east steps sit at perm's right cyclic descents."""
    if perm.n != a + b:
        raise WrongDescentCount(f"permutation size {perm.n} != {a + b}")
    descents = set(perm.right_cyclic_descents())
    if len(descents) != b:
        raise WrongDescentCount(f"{len(descents)} cyclic descents, expected {b}")
    word = "".join(EAST if i in descents else NORTH for i in range(1, a + b + 1))
    return DyckPath(a, b, word)


@lru_cache(maxsize=None)
def enumerate_paths(a: int, b: int) -> tuple[DyckPath, ...]:
    """All (a,b)-Dyck paths in lexicographic step order with N < E."""
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    out: list[DyckPath] = []
    word: list[str] = []

    def extend(x: int, y: int) -> None:
        if len(word) == a + b:
            out.append(DyckPath(a, b, "".join(word)))
            return
        if y < a:
            word.append(NORTH)
            extend(x, y + 1)
            word.pop()
        if x < b and a * (x + 1) <= b * y:
            word.append(EAST)
            extend(x + 1, y)
            word.pop()

    extend(0, 0)
    return tuple(out)


def rational_catalan_number(a: int, b: int) -> int:
    """(1/(a+b)) * C(a+b, a), exact."""
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    binom = math.comb(a + b, a)
    assert binom % (a + b) == 0
    return binom // (a + b)


def conjugate(path: DyckPath) -> DyckPath:
    """Conjugate path, via the complement rule on positive hooks.

    With H the positive hooks and m = max(H), the conjugate's hooks are
    {m - n : n in {0..m} \\ H}.  The area-0 path is its own conjugate.
    """
    hooks = path.positive_hooks()
    if not hooks:
        return path
    m = hooks[0]
    present = frozenset(hooks)
    complement = [m - n for n in range(m + 1) if n not in present]
    return path_from_hooks(path.a, path.b, complement)


def flip(path: DyckPath) -> DyckPath:
    """Reflect an (a,b)-path across the diagonal into a (b,a)-path."""
    swapped = path.steps.translate(str.maketrans({NORTH: EAST, EAST: NORTH}))
    return DyckPath(path.b, path.a, swapped[::-1])


def reverse(path: DyckPath) -> DyckPath:
    """Square-case reversal: bounds the conjugate of the bounded partition."""
    if path.b != path.a + 1:
        raise NotSquareCase(f"({path.a}, {path.b}) is not (n, n+1)")
    return path_from_bounded_partition(
        path.a, path.b, path.bounded_partition().conjugate()
    )


def star_product(first: DyckPath, second: DyckPath) -> DyckPath:
    """Cut `first` at its unique highest level and infix `second` there."""
    lv = first.levels()
    top = max(lv)
    if lv.count(top) != 1:
        raise AmbiguousMaxLevel(f"maximal level {top} repeats in {first}")
    cut = lv.index(top)
    word = first.steps[:cut] + second.steps + first.steps[cut:]
    return DyckPath(first.a + second.a, first.b + second.b, word)


def maximal_level(path: DyckPath) -> int:
    """Largest entry of the reading word."""
    return max(path.reading_word())


def predecessor(path: DyckPath) -> DyckPath:
    """Remove the box under the unique peak farthest from the diagonal.

    Swaps that peak's NE corner to EN, replacing the maximal level m by
    m - a - b in the reading word and dropping the area by exactly 1.
    """
    word = path.reading_word()
    m = max(word)
    if m <= path.a + path.b:
        raise AreaZero(f"{path} has no box to remove")
    i = word.index(m)
    steps = path.steps
    assert steps[i - 1] == NORTH and steps[i] == EAST
    new = steps[: i - 1] + EAST + NORTH + steps[i + 1 :]
    return DyckPath(path.a, path.b, new)
