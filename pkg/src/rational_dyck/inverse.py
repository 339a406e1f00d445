"""Inverting zeta: the pair map iota, the conjugate-area involution chi,
and closed-form inverses for special path families.

Knowing both images (Q, R) = (zeta(P), eta(P)) recovers P: pair the steps
of Q with the steps of R rotated half a turn, read the resulting cycle as
one-line notation, and place east steps at its cyclic descents.  On top of
that sit a dispatcher for zeta inverse, the square-case formulas, the
level-1 star recursion, and the justified/valley families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import bounce as _bounce
from .errors import (
    BelowDiagonal,
    DimensionTooSmall,
    DyckError,
    InconsistentPair,
    InternalInvariantError,
    InvalidValleyIndex,
    Level1NotVisited,
    NoPreimage,
    NotADyckPath,
    NotSquareCase,
    TooManyBoxes,
    WrongDescentCount,
)
from .paths import (
    DyckPath,
    EAST,
    NORTH,
    Partition,
    Permutation,
    box_value,
    enumerate_paths,
    path_from_bounded_partition,
    path_from_hooks,
    path_from_permutation,
    reverse,
    star_product,
)
from .zeta import eta, zeta

__all__ = [
    "InversionResult",
    "pair_gamma",
    "iota",
    "exceedances_check",
    "zeta_inverse",
    "zeta_inverse_detailed",
    "chi",
    "square_gamma_shaded",
    "split_dims",
    "zeta_inverse_level1",
    "chi_level1",
    "level_point",
    "kth_valley_path",
    "chi_kth_valley",
    "justified",
]

STRATEGIES = ("auto", "square", "level1", "fuss", "search", "table")


# ---------------------------------------------------------------------------
# The pair inverse


def _step_positions(word: str) -> tuple[dict[int, int], dict[int, int]]:
    """Labels (1-based step numbers) of the east step per column and the
    north step per row."""
    east: dict[int, int] = {}
    north: dict[int, int] = {}
    x = y = 0
    for label, s in enumerate(word, start=1):
        if s == EAST:
            east[x] = label
            x += 1
        else:
            north[y] = label
            y += 1
    return east, north


def pair_gamma(q: DyckPath, r: DyckPath) -> Permutation:
    """Pair each step of Q with the step of rotated R in its row or column.

    R is rotated half a turn to sit below the diagonal; both paths are then
    labelled 1..a+b from the bottom-left corner.  A horizontal label of Q
    maps to the horizontal label of rotated R in the same column, a
    vertical label to the vertical label in the same row.
    """
    if (q.a, q.b) != (r.a, r.b):
        raise ValueError(f"dimension mismatch: ({q.a},{q.b}) vs ({r.a},{r.b})")
    q_east, q_north = _step_positions(q.steps)
    r_east, r_north = _step_positions(r.steps[::-1])
    images = [0] * q.length
    for col, label in q_east.items():
        images[label - 1] = r_east[col]
    for row, label in q_north.items():
        images[label - 1] = r_north[row]
    return Permutation(tuple(images))


def iota(q: DyckPath, r: DyckPath, *, trusted: bool = False) -> DyckPath:
    """Recover P from the pair (zeta(P), eta(P)).

    Unless `trusted`, the result is round-tripped through both maps; a pair
    that decodes cleanly but fails the round trip raises InconsistentPair.
    """
    g = pair_gamma(q, r)
    sigma = Permutation(g.cycle_from(1))
    try:
        path = path_from_permutation(sigma, q.a, q.b)
    except (WrongDescentCount, BelowDiagonal) as exc:
        raise NotADyckPath(str(exc)) from exc
    if not trusted and (zeta(path) != q or eta(path) != r):
        raise InconsistentPair(f"iota({q}, {r}) decoded {path} but images differ")
    return path


def exceedances_check(q: DyckPath, r: DyckPath) -> bool:
    """Exceedance positions of the pairing give the north steps of Q and its
    exceedance values the north steps of rotated R."""
    g = pair_gamma(q, r)
    q_norths = {i + 1 for i, s in enumerate(q.steps) if s == NORTH}
    rot_norths = {i + 1 for i, s in enumerate(r.steps[::-1]) if s == NORTH}
    return (
        set(g.exceedance_positions()) == q_norths
        and set(g.exceedance_values()) == rot_norths
    )


# ---------------------------------------------------------------------------
# The zeta inverse dispatcher


@dataclass(frozen=True)
class InversionResult:
    path: DyckPath
    strategy: str
    deltas: tuple[int, ...] | None = None


@lru_cache(maxsize=None)
def _zeta_table(a: int, b: int) -> dict[DyckPath, DyckPath]:
    return {zeta(p): p for p in enumerate_paths(a, b)}


def _invert_square(q: DyckPath) -> InversionResult:
    if q.b != q.a + 1:
        raise NotSquareCase(f"({q.a}, {q.b}) is not (n, n+1)")
    return InversionResult(iota(q, reverse(q)), "square")


def _invert_level1(q: DyckPath) -> InversionResult:
    return InversionResult(zeta_inverse_level1(q), "level1")


def _invert_fuss(q: DyckPath) -> InversionResult:
    deltas = () if q.a == 1 or q.b == 1 else _bounce.fuss_delta_trace(q)
    return InversionResult(_bounce.zeta_inverse_fuss(q), "fuss", deltas)


def _invert_search(q: DyckPath) -> InversionResult:
    if q.a == 1 or q.b == 1:
        return InversionResult(q, "search", ())
    found, attempts = _bounce.search_delta_traces(q)
    if not found:
        raise NoPreimage(f"search exhausted for {q} ({attempts} traces tried)")
    path, deltas = found[0]
    return InversionResult(path, "search", deltas)


def _invert_table(q: DyckPath) -> InversionResult:
    table = _zeta_table(q.a, q.b)
    if q not in table:
        raise NoPreimage(f"{q} is not in the image of zeta on ({q.a}, {q.b})")
    return InversionResult(table[q], "table")


_STRATEGY_FUNCS = {
    "square": _invert_square,
    "level1": _invert_level1,
    "fuss": _invert_fuss,
    "search": _invert_search,
    "table": _invert_table,
}


def zeta_inverse_detailed(q: DyckPath, strategy: str = "auto") -> InversionResult:
    """Find P with zeta(P) = Q, most specific strategy first.

    Every branch's output is verified by applying zeta before it is
    returned, so a buggy precondition test can only cost time, not
    correctness.  `strategy` forces a single branch.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy != "auto":
        result = _STRATEGY_FUNCS[strategy](q)
        if zeta(result.path) != q:
            raise NoPreimage(f"strategy {strategy} produced a non-preimage for {q}")
        return result
    if q.a == 1 or q.b == 1:
        return InversionResult(q, "table")
    order = []
    if q.b == q.a + 1:
        order.append("square")
    if q.visits(*level_point(q.a, q.b, 1)):
        order.append("level1")
    if q.b % q.a == 1:
        order.append("fuss")
    order += ["search", "table"]
    for name in order:
        try:
            result = _STRATEGY_FUNCS[name](q)
        except DyckError:
            continue
        if zeta(result.path) == q:
            return result
    raise NoPreimage(f"all strategies failed for {q}")


def zeta_inverse(q: DyckPath, strategy: str = "auto") -> DyckPath:
    return zeta_inverse_detailed(q, strategy).path


def chi(q: DyckPath) -> DyckPath:
    """Conjugate-area involution: eta of the zeta preimage."""
    return eta(zeta_inverse(q))


# ---------------------------------------------------------------------------
# Square case


def square_gamma_shaded(q: DyckPath) -> Permutation:
    """Pairing cycle of (Q, reverse(Q)) read off the diagonal-shaded boxes.

    Vertical step: run east to the first shaded box in its row, then up to
    the path's horizontal step in that column; the image is that label
    plus one.  Horizontal step: run down to the lowest shaded box in its
    column, then left to the path's vertical step in that row; the image
    is that label plus one.  The first horizontal step maps to 1.
    """
    n, width = q.a, q.b
    if width != n + 1:
        raise NotSquareCase(f"({n}, {width}) is not (n, n+1)")

    def shaded(col: int, row: int) -> bool:
        return n * col < (row + 1) * width and row * width < n * (col + 1)

    east_label, north_label = _step_positions(q.steps)
    east_col = {label: col for col, label in east_label.items()}
    north_row = {label: row for row, label in north_label.items()}
    north_col = {row: col for row, col in enumerate(q.north_columns())}
    first_east = east_label[0]

    images = [0] * q.length
    for label in range(1, q.length + 1):
        if label in north_row:
            row = north_row[label]
            col = north_col[row]
            hit = next(c for c in range(col, width) if shaded(c, row))
            images[label - 1] = east_label[hit] + 1
        elif label == first_east:
            images[label - 1] = 1
        else:
            col = east_col[label]
            low = min(r for r in range(n) if shaded(col, r))
            images[label - 1] = north_label[low] + 1
    return Permutation(tuple(images))


# ---------------------------------------------------------------------------
# Level-1 decomposition


def split_dims(a: int, b: int) -> tuple[int, int, int, int]:
    """The unique (a', b', a'', b'') with a'b - b'a = 1 and b''a - a''b = 1,
    splitting (a, b) as (a'+a'', b'+b'')."""
    if a < 2 or b < 2:
        raise DimensionTooSmall(f"({a}, {b}) does not split")
    if math.gcd(a, b) != 1:
        raise ValueError(f"gcd({a}, {b}) != 1")
    a1 = pow(b, -1, a)
    b1 = (a1 * b - 1) // a
    a2, b2 = a - a1, b - b1
    assert a1 * b - b1 * a == 1 and b2 * a - a2 * b == 1
    assert 0 < a1 < a and 0 < b1 < b
    return a1, b1, a2, b2


def level_point(a: int, b: int, level: int) -> tuple[int, int]:
    """The unique grid lattice point with y*b - x*a equal to the level."""
    for y in range(a + 1):
        num = y * b - level
        if num >= 0 and num % a == 0 and num // a <= b:
            return (num // a, y)
    raise ValueError(f"no lattice point of level {level} in the {a}x{b} grid")


def _split_at_level1(q: DyckPath) -> tuple[DyckPath, DyckPath]:
    a1, b1, a2, b2 = split_dims(q.a, q.b)
    if not q.visits(b1, a1):
        raise Level1NotVisited(f"{q} misses the level-1 point ({b1}, {a1})")
    cut = a1 + b1
    return DyckPath(a1, b1, q.steps[:cut]), DyckPath(a2, b2, q.steps[cut:])


def zeta_inverse_level1(q: DyckPath) -> DyckPath:
    """Star-product recursion for paths through the level-1 point."""
    if q.a == 1 or q.b == 1:
        return q
    left, right = _split_at_level1(q)
    return star_product(zeta_inverse(left), zeta_inverse(right))


def _chi_shape(q: DyckPath) -> frozenset[tuple[int, int]]:
    """Box set whose half-turn rotation bounds chi(q).

    For a path through the level-1 point, the bottom-left and top-right
    rectangles carry the shapes of the two sub-paths and every box entirely
    below the diagonal outside them (the southeast block minus its crossed
    corner box) is added whole.  Sub-paths missing their own level-1 point
    fall back to the general conjugate-area map.
    """
    if q.a == 1 or q.b == 1:
        return frozenset()
    a1, b1, _, _ = split_dims(q.a, q.b)
    if not q.visits(b1, a1):
        bounded = chi(q).north_columns()
        return frozenset(
            (q.b - 1 - c, q.a - 1 - r)
            for r, width in enumerate(bounded)
            for c in range(width)
        )
    left, right = _split_at_level1(q)
    boxes = set(_chi_shape(left))
    boxes |= {(c + b1, r + a1) for c, r in _chi_shape(right)}
    boxes |= {
        (c, r) for c in range(b1, q.b) for r in range(a1) if (c, r) != (b1, a1 - 1)
    }
    return frozenset(boxes)


def _partition_from_boxes(a: int, b: int, boxes) -> Partition:
    counts = [0] * a
    for c, r in boxes:
        counts[r] += 1
    for c, r in boxes:
        if not all((cc, r) in boxes for cc in range(c)):
            raise InternalInvariantError("box set is not left-justified")
    return Partition(tuple(reversed(counts)))


def chi_level1(q: DyckPath) -> DyckPath:
    """Conjugate-area image of a level-1 path, without inverting zeta."""
    if q.a >= 2 and q.b >= 2:
        a1, b1, _, _ = split_dims(q.a, q.b)
        if not q.visits(b1, a1):
            raise Level1NotVisited(f"{q} misses the level-1 point ({b1}, {a1})")
    shape = _chi_shape(q)
    rotated = {(q.b - 1 - c, q.a - 1 - r) for c, r in shape}
    return path_from_bounded_partition(q.a, q.b, _partition_from_boxes(q.a, q.b, rotated))


# ---------------------------------------------------------------------------
# kth-valley paths


def _northwest_rect(a: int, b: int, level: int) -> set[tuple[int, int]]:
    x, y = level_point(a, b, level)
    return {(c, r) for c in range(x) for r in range(y, a)}


def _southeast_hat(a: int, b: int, level: int) -> set[tuple[int, int]]:
    x, y = level_point(a, b, level)
    boxes = {(c, r) for c in range(x, b) for r in range(y)}
    boxes.discard((x, y - 1))
    return boxes


def kth_valley_path(a: int, b: int, k: int) -> DyckPath:
    """The path whose cyclic valleys sit at levels 0, 1, ..., k (k < a)."""
    if not 0 <= k < a:
        raise InvalidValleyIndex(f"need 0 <= k < {a}, got {k}")
    boxes: set[tuple[int, int]] = set()
    for level in range(1, k + 1):
        boxes |= _northwest_rect(a, b, level)
    return path_from_bounded_partition(a, b, _partition_from_boxes(a, b, boxes))


def chi_kth_valley(a: int, b: int, k: int) -> DyckPath:
    """Conjugate-area image of the kth-valley path, by the hat regions."""
    if not 0 <= k < a:
        raise InvalidValleyIndex(f"need 0 <= k < {a}, got {k}")
    boxes: set[tuple[int, int]] = set()
    for level in range(1, k + 1):
        boxes |= _southeast_hat(a, b, level)
    rotated = {(b - 1 - c, a - 1 - r) for c, r in boxes}
    return path_from_bounded_partition(a, b, _partition_from_boxes(a, b, rotated))


# ---------------------------------------------------------------------------
# Justified partitions


def justified(a: int, b: int, n: int) -> tuple[Partition, Partition, DyckPath]:
    """Left-justified and up-justified n-box partitions, and the path P^n
    carrying the n smallest positive hooks; chi maps the first path family
    to the second, and zeta sends P^n to the left-justified path."""
    limit = (a - 1) * (b - 1) // 2
    if not 0 <= n <= limit:
        raise TooManyBoxes(f"need 0 <= n <= {limit}, got {n}")

    remaining = n
    left_boxes: set[tuple[int, int]] = set()
    for col in range(b):
        rows = [r for r in range(a) if a * (col + 1) <= b * r]
        take = min(len(rows), remaining)
        left_boxes |= {(col, r) for r in sorted(rows, reverse=True)[:take]}
        remaining -= take
        if remaining == 0:
            break
    lam = _partition_from_boxes(a, b, left_boxes)

    remaining = n
    up_parts: list[int] = []
    for row in reversed(range(a)):
        cap = sum(1 for c in range(b) if box_value(a, b, c, row) > 0)
        take = min(cap, remaining)
        up_parts.append(take)
        remaining -= take
    nu = Partition(tuple(up_parts))

    positives = sorted(
        v
        for r in range(a)
        for c in range(b)
        if (v := box_value(a, b, c, r)) > 0
    )
    p_n = path_from_hooks(a, b, positives[:n])
    return lam.trimmed(), nu.trimmed(), p_n
