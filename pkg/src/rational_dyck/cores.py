"""Simultaneous core partitions and the hook machinery on the grid.

A simultaneous (a,b)-core is a partition none of whose boxes has hook
length a or b.  For coprime a, b these are in bijection with (a,b)-Dyck
paths: the first-column hooks of the core are exactly the positive hook
values under the path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotACore, NotCoprime
from .paths import DyckPath, Partition, box_value, path_from_hooks

__all__ = [
    "HookFilling",
    "CorePartition",
    "RowLengthFilling",
    "hook_filling",
    "positive_hooks",
    "anderson",
    "anderson_inverse",
    "a_rows",
    "a_columns",
    "boundary_boxes",
    "skew_length_core",
    "core_conjugate",
    "row_length_filling",
    "a_columns_skew",
]


def positive_hooks(path: DyckPath) -> tuple[int, ...]:
    """Positive grid values under the path, largest first."""
    return path.positive_hooks()


@dataclass(frozen=True)
class HookFilling:
    """The integer filling of the a x b grid of boxes.

    The box whose lower-right lattice point is p carries level(p); values
    grow by a per box west and b per box north, and the box is above the
    main diagonal exactly when its value is positive.
    """

    a: int
    b: int

    def __post_init__(self):
        if math.gcd(self.a, self.b) != 1:
            raise NotCoprime(f"gcd({self.a}, {self.b}) != 1")

    def value(self, col: int, row: int) -> int:
        if not (0 <= col < self.b and 0 <= row < self.a):
            raise ValueError(f"box ({col}, {row}) outside the {self.a}x{self.b} grid")
        return box_value(self.a, self.b, col, row)

    def positive_values(self) -> tuple[int, ...]:
        """All positive entries, largest first."""
        vals = [
            self.value(col, row)
            for row in range(self.a)
            for col in range(self.b)
            if self.value(col, row) > 0
        ]
        return tuple(sorted(vals, reverse=True))

    def grid(self) -> tuple[tuple[int, ...], ...]:
        """Rows of values, top row first."""
        return tuple(
            tuple(self.value(col, row) for col in range(self.b))
            for row in reversed(range(self.a))
        )


def hook_filling(a: int, b: int) -> HookFilling:
    return HookFilling(a, b)


@dataclass(frozen=True)
class CorePartition:
    """A partition with no hook of length a or b, for coprime a and b."""

    parts: tuple[int, ...]
    a: int
    b: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if p != 0)
        object.__setattr__(self, "parts", parts)
        if math.gcd(self.a, self.b) != 1:
            raise NotCoprime(f"gcd({self.a}, {self.b}) != 1")
        p = Partition(parts)  # validates monotonicity
        for i, j in p.boxes():
            h = p.hook(i, j)
            if h == self.a or h == self.b:
                raise NotACore(
                    f"box ({i}, {j}) of {parts} has forbidden hook {h}"
                )

    @property
    def partition(self) -> Partition:
        return Partition(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def leading_hooks(self) -> tuple[int, ...]:
        return self.partition.leading_hooks()

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "parts": list(self.parts)}

    @classmethod
    def from_json(cls, data: dict) -> "CorePartition":
        return cls(tuple(int(p) for p in data["parts"]), int(data["a"]), int(data["b"]))


@lru_cache(maxsize=None)
def anderson(path: DyckPath) -> CorePartition:
    """The (a,b)-core whose leading hooks are the path's positive hooks.

    The row with the i-th smallest leading hook h has length h - (i - 1).
    """
    hooks = sorted(path.positive_hooks())
    lengths = [h - i for i, h in enumerate(hooks)]
    return CorePartition(tuple(reversed(lengths)), path.a, path.b)


def anderson_inverse(kappa: CorePartition) -> DyckPath:
    """The path whose positive hooks are the core's leading hooks."""
    try:
        return path_from_hooks(kappa.a, kappa.b, kappa.leading_hooks())
    except ValueError as exc:
        raise NotACore(str(exc)) from exc


def _check_core_modulus(kappa: CorePartition, m: int) -> Partition:
    p = kappa.partition
    if any(p.hook(i, j) == m for i, j in p.boxes()):
        raise NotACore(f"{kappa.parts} has a hook of length {m}")
    return p


def a_rows(kappa: CorePartition, m: int) -> tuple[int, ...]:
    """Rows carrying the largest leading hook in each residue class mod m."""
    _check_core_modulus(kappa, m)
    best: dict[int, int] = {}
    for row, h in enumerate(kappa.leading_hooks()):
        res = h % m
        if res not in best:  # hooks are listed largest first
            best[res] = row
    return tuple(sorted(best.values()))


def a_columns(kappa: CorePartition, m: int) -> tuple[int, ...]:
    """Columns carrying the largest first-row hook per residue class mod m."""
    _check_core_modulus(kappa, m)
    best: dict[int, int] = {}
    hooks = kappa.partition.first_row_hooks()
    for col, h in enumerate(hooks):
        res = h % m
        if res not in best:  # first-row hooks decrease left to right
            best[res] = col
    return tuple(sorted(best.values()))


def boundary_boxes(kappa: CorePartition, m: int) -> int:
    """Number of boxes with hook length less than m."""
    p = _check_core_modulus(kappa, m)
    return sum(1 for i, j in p.boxes() if p.hook(i, j) < m)


def skew_length_core(kappa: CorePartition) -> int:
    """Boxes lying in the a-rows and the b-boundary of the core."""
    p = kappa.partition
    rows = a_rows(kappa, kappa.a)
    return sum(
        1 for i in rows for j in range(kappa.parts[i]) if p.hook(i, j) < kappa.b
    )


def a_columns_skew(kappa: CorePartition) -> int:
    """Boxes lying in the a-columns and the b-boundary of the core."""
    p = kappa.partition
    cols = set(a_columns(kappa, kappa.a))
    return sum(1 for i, j in p.boxes() if j in cols and p.hook(i, j) < kappa.b)


def core_conjugate(kappa: CorePartition) -> CorePartition:
    """Transpose of the core; hook lengths are preserved, so still a core."""
    return CorePartition(kappa.partition.conjugate().parts, kappa.a, kappa.b)


class RowLengthFilling:
    """Row lengths of the core, written into the boxes under the path.

    A box with positive value h gets h - p_h, where p_h counts the
    positive hooks of the path smaller than h; this equals the length of
    the core row with leading hook h.  Boxes on or below the diagonal get 0.
    """

    def __init__(self, path: DyckPath):
        self.path = path
        hooks = path.positive_hooks()
        rank = {h: i for i, h in enumerate(sorted(hooks))}
        values: dict[tuple[int, int], int] = {}
        for row, col0 in enumerate(path.north_columns()):
            for col in range(col0, path.b):
                v = box_value(path.a, path.b, col, row)
                values[(col, row)] = v - rank[v] if v > 0 else 0
        self._values = values

    def value(self, col: int, row: int) -> int:
        return self._values[(col, row)]

    def boxes(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._values))

    def total(self) -> int:
        """Sum of all entries; equals the size of the core."""
        return sum(self._values.values())

    def westmost_values(self) -> tuple[int, ...]:
        """Value of the leftmost box under the path in each row."""
        cols = self.path.north_columns()
        return tuple(self.value(cols[row], row) for row in range(self.path.a))

    def northmost_values(self) -> tuple[int, ...]:
        """Value of the topmost box under the path in each column."""
        cols = self.path.north_columns()
        out = []
        for col in range(self.path.b):
            row = max(r for r in range(self.path.a) if cols[r] <= col)
            out.append(self.value(col, row))
        return tuple(out)


def row_length_filling(path: DyckPath) -> RowLengthFilling:
    return RowLengthFilling(path)
