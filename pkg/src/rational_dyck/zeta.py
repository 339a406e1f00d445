"""The zeta and eta maps, by four independent constructions.

zeta sweeps a line of slope a/b across the path from the diagonal towards
the northwest; eta sweeps from the far corner back southeast.  Both are
computable from the core (boundary-box counts), by sorting levels, from a
laser filling, or from an interval-intersection grid.  The four routes are
kept as genuinely separate code paths so they can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cores import a_rows, anderson
from .errors import InternalInvariantError, MethodDisagreement
from .paths import (
    DyckPath,
    EAST,
    NORTH,
    Partition,
    box_value,
    path_from_bounded_partition,
)

__all__ = [
    "LaserFilling",
    "IntervalGrid",
    "lambda_partition",
    "mu_partition",
    "zeta_via_cores",
    "eta_via_cores",
    "zeta_via_sweep",
    "eta_via_sweep",
    "laser_filling",
    "zeta_via_lasers",
    "eta_via_lasers",
    "interval_grid",
    "zeta_via_intervals",
    "eta_via_intervals",
    "zeta",
    "eta",
]


def _bound(a: int, b: int, parts) -> DyckPath:
    try:
        return path_from_bounded_partition(a, b, parts)
    except Exception as exc:  # a failure here is a bug, never bad input
        raise InternalInvariantError(f"image partition {parts} is not bounded") from exc


# ---------------------------------------------------------------------------
# Via cores


@lru_cache(maxsize=None)
def lambda_partition(path: DyckPath) -> Partition:
    """Per-row counts of b-boundary boxes in the a-rows of the core, length a."""
    kappa = anderson(path)
    p = kappa.partition
    counts = [
        sum(1 for j in range(kappa.parts[i]) if p.hook(i, j) < path.b)
        for i in a_rows(kappa, path.a)
    ]
    return Partition(tuple(sorted(counts, reverse=True))).padded(path.a)


@lru_cache(maxsize=None)
def mu_partition(path: DyckPath) -> Partition:
    """Per-row counts of a-boundary boxes in the b-rows of the core, length b."""
    kappa = anderson(path)
    p = kappa.partition
    counts = [
        sum(1 for j in range(kappa.parts[i]) if p.hook(i, j) < path.a)
        for i in a_rows(kappa, path.b)
    ]
    return Partition(tuple(sorted(counts, reverse=True))).padded(path.b)


def zeta_via_cores(path: DyckPath) -> DyckPath:
    return _bound(path.a, path.b, lambda_partition(path))


def eta_via_cores(path: DyckPath) -> DyckPath:
    return _bound(path.a, path.b, mu_partition(path).conjugate().padded(path.a))


# ---------------------------------------------------------------------------
# Via sweep


def zeta_via_sweep(path: DyckPath) -> DyckPath:
    """Sort the reading word; barred (east) entries become the east steps."""
    levels = path.levels()
    entries = [(levels[i], path.steps[i]) for i in range(path.length)]
    if len({v for v, _ in entries}) != len(entries):
        raise InternalInvariantError("repeated level in reading word")
    word = "".join(s for _, s in sorted(entries))
    return DyckPath(path.a, path.b, word)


def eta_via_sweep(path: DyckPath) -> DyckPath:
    """Sort the reverse reading word into a southwest path from (b, a)."""
    levels = path.levels()
    n = path.length
    # reverse step i undoes original step n - i (0-indexed here); an E char
    # stands for a west step and an N char for a south step
    entries = [(levels[n - i], path.steps[n - 1 - i]) for i in range(n)]
    if len({v for v, _ in entries}) != len(entries):
        raise InternalInvariantError("repeated level in reverse reading word")
    southwest = [s for _, s in sorted(entries)]
    # reading the same geometric path northeast turns W/S back into E/N
    return DyckPath(path.a, path.b, "".join(reversed(southwest)))


# ---------------------------------------------------------------------------
# Via lasers


class LaserFilling:
    """Wall-crossing counts of slope-a/b lasers through box corners.

    Each box below the path and above the diagonal fires a bi-directional
    laser of slope a/b from its southeast corner; its value is the number
    of vertical walls of the path the laser crosses.  The total equals the
    skew length.
    """

    def __init__(self, path: DyckPath):
        self.path = path
        norths = path.north_levels()
        easts = path.east_levels()
        values: dict[tuple[int, int], int] = {}
        for row, col0 in enumerate(path.north_columns()):
            for col in range(col0, path.b):
                v = box_value(path.a, path.b, col, row)
                if v <= 0:
                    continue
                vertical = sum(1 for n in norths if n < v < n + path.b)
                horizontal = sum(1 for e in easts if v < e < v + path.a)
                if vertical != horizontal:
                    raise InternalInvariantError(
                        f"laser at box ({col}, {row}) crosses {vertical} vertical "
                        f"but {horizontal} horizontal walls"
                    )
                values[(col, row)] = vertical
        self._values = values

    def value(self, col: int, row: int) -> int:
        return self._values[(col, row)]

    def boxes(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._values))

    def total(self) -> int:
        return sum(self._values.values())

    def row_sums(self) -> tuple[int, ...]:
        return tuple(
            sum(v for (c, r), v in self._values.items() if r == row)
            for row in range(self.path.a)
        )

    def column_sums(self) -> tuple[int, ...]:
        return tuple(
            sum(v for (c, r), v in self._values.items() if c == col)
            for col in range(self.path.b)
        )


def laser_filling(path: DyckPath) -> LaserFilling:
    return LaserFilling(path)


def zeta_via_lasers(path: DyckPath) -> DyckPath:
    rows = sorted(laser_filling(path).row_sums(), reverse=True)
    return _bound(path.a, path.b, Partition(tuple(rows)))


def eta_via_lasers(path: DyckPath) -> DyckPath:
    cols = sorted(laser_filling(path).column_sums(), reverse=True)
    mu = Partition(tuple(cols))
    return _bound(path.a, path.b, mu.conjugate().padded(path.a))


# ---------------------------------------------------------------------------
# Via interval intersections


@dataclass(frozen=True)
class IntervalGrid:
    """Disjointness grid of the north intervals against the east intervals.

    Row r (bottom to top) carries the r-th smallest north interval
    [n, n+b]; column c carries the c-th smallest east interval [e-a, e].
    A cell is shaded when the two intervals do not intersect, which happens
    northwest of the diagonal when e < n and southeast when n + b < e - a.
    """

    north_intervals: tuple[tuple[int, int], ...]
    east_intervals: tuple[tuple[int, int], ...]
    shaded: tuple[tuple[bool, ...], ...]  # [row][col], row 0 at the bottom

    @property
    def a(self) -> int:
        return len(self.north_intervals)

    @property
    def b(self) -> int:
        return len(self.east_intervals)

    def northwest_shaded(self) -> tuple[tuple[bool, ...], ...]:
        """Cells shaded because the east interval sits below the north one."""
        return tuple(
            tuple(e_hi < n_lo for (e_lo, e_hi) in self.east_intervals)
            for (n_lo, n_hi) in self.north_intervals
        )

    def southeast_shaded(self) -> tuple[tuple[bool, ...], ...]:
        """Cells shaded because the east interval sits above the north one."""
        return tuple(
            tuple(n_hi < e_lo for (e_lo, e_hi) in self.east_intervals)
            for (n_lo, n_hi) in self.north_intervals
        )


def interval_grid(path: DyckPath) -> IntervalGrid:
    norths = sorted(path.north_levels())
    easts = sorted(path.east_levels())
    n_ints = tuple((n, n + path.b) for n in norths)
    e_ints = tuple((e - path.a, e) for e in easts)
    shaded = tuple(
        tuple(max(nl, el) > min(nh, eh) for (el, eh) in e_ints) for (nl, nh) in n_ints
    )
    return IntervalGrid(n_ints, e_ints, shaded)


def zeta_via_intervals(path: DyckPath) -> DyckPath:
    grid = interval_grid(path)
    counts = tuple(sum(row) for row in reversed(grid.northwest_shaded()))
    return _bound(path.a, path.b, Partition(counts))


def eta_via_intervals(path: DyckPath) -> DyckPath:
    grid = interval_grid(path)
    se = grid.southeast_shaded()
    counts = tuple(
        sum(se[r][c] for r in range(grid.a)) for c in reversed(range(grid.b))
    )
    mu = Partition(counts)
    return _bound(path.a, path.b, mu.conjugate().padded(path.a))


# ---------------------------------------------------------------------------
# Canonical entry points

_ZETA_METHODS = {
    "cores": zeta_via_cores,
    "sweep": zeta_via_sweep,
    "laser": zeta_via_lasers,
    "intervals": zeta_via_intervals,
}

_ETA_METHODS = {
    "cores": eta_via_cores,
    "sweep": eta_via_sweep,
    "laser": eta_via_lasers,
    "intervals": eta_via_intervals,
}


def _dispatch(name: str, methods, path: DyckPath, check: bool) -> DyckPath:
    if not check:
        return methods["cores"](path)
    results = {m: fn(path) for m, fn in methods.items()}
    if len(set(results.values())) != 1:
        raise MethodDisagreement(
            f"{name}({path})", {m: str(p) for m, p in results.items()}
        )
    return results["cores"]


def zeta(path: DyckPath, *, check: bool = False) -> DyckPath:
    """The zeta map; with check=True all four constructions must agree."""
    return _dispatch("zeta", _ZETA_METHODS, path, check)


def eta(path: DyckPath, *, check: bool = False) -> DyckPath:
    """The eta map; with check=True all four constructions must agree."""
    return _dispatch("eta", _ETA_METHODS, path, check)
