"""Exact q- and q,t-polynomial arithmetic and the conjecture checkers.

Everything is integer arithmetic: Gaussian binomials come from the
standard Pascal recurrence, and dividing by [a+b]_q is long division with
an explicit zero-remainder check.  The checkers enumerate paths outright
and report findings as data rather than raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DyckError, InexactDivision, NotCoprime
from .inverse import iota
from .paths import DyckPath, enumerate_paths, rational_catalan_number
from .stats import area, co_skew_length, coarea, core_rank, dinv, path_rank, skew_length
from .zeta import zeta

__all__ = [
    "QPolynomial",
    "QTPolynomial",
    "q_bracket",
    "gaussian_binomial",
    "rational_q_catalan",
    "sl_rank_generating",
    "qt_catalan",
    "qt_symmetry_check",
    "BijectivityReport",
    "bijectivity_report",
]


@dataclass(frozen=True)
class QPolynomial:
    """Dense integer-coefficient polynomial in q, trailing zeros stripped."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPolynomial":
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(
            tuple(
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            )
        )

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if not self or not other:
            return QPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return QPolynomial(tuple(out))

    def evaluate(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def divide_exact(self, divisor: "QPolynomial") -> "QPolynomial":
        """Long division that must leave remainder zero."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dn = len(divisor.coeffs)
        quot = [0] * max(len(rem) - dn + 1, 0)
        for i in range(len(rem) - dn, -1, -1):
            head = rem[i + dn - 1]
            if head % lead != 0:
                raise InexactDivision(f"{self.coeffs} not divisible by {divisor.coeffs}")
            q = head // lead
            quot[i] = q
            if q:
                for j, c in enumerate(divisor.coeffs):
                    rem[i + j] -= q * c
        if any(rem):
            raise InexactDivision(f"{self.coeffs} not divisible by {divisor.coeffs}")
        return QPolynomial(tuple(quot))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*q" if c != 1 else "q")
            else:
                terms.append(f"{c}*q^{i}" if c != 1 else f"q^{i}")
        return " + ".join(terms)


def q_bracket(n: int) -> QPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return QPolynomial((1,) * n)


def gaussian_binomial(n: int, k: int) -> QPolynomial:
    """q-binomial coefficient via the Pascal recurrence."""
    if not 0 <= k <= n:
        return QPolynomial.zero()
    row = [QPolynomial.one()] + [QPolynomial.zero()] * k
    for _ in range(n):
        for j in range(min(k, n), 0, -1):
            row[j] = row[j - 1] + QPolynomial.monomial(j) * row[j]
    return row[k]


def rational_q_catalan(a: int, b: int) -> QPolynomial:
    """qbinom(a+b, a) / [a+b]_q, exact when gcd(a, b) = 1."""
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    return gaussian_binomial(a + b, a).divide_exact(q_bracket(a + b))


def sl_rank_generating(a: int, b: int, *, rank_variant: str = "core") -> QPolynomial:
    """Sum of q^(sl + rank) over all paths; rank is the core rank (= area)
    by default, the bounded-partition row count with rank_variant='path'."""
    rank_fn = core_rank if rank_variant == "core" else path_rank
    out = QPolynomial.zero()
    for p in enumerate_paths(a, b):
        out = out + QPolynomial.monomial(skew_length(p) + rank_fn(p))
    return out


@dataclass(frozen=True)
class QTPolynomial:
    """Sparse integer polynomial in q and t, keyed by (q-power, t-power)."""

    terms: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        cleaned = tuple(
            ((int(i), int(j)), int(c))
            for (i, j), c in sorted(self.terms)
            if c != 0
        )
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def from_exponent_pairs(cls, pairs) -> "QTPolynomial":
        counts: dict[tuple[int, int], int] = {}
        for i, j in pairs:
            counts[(i, j)] = counts.get((i, j), 0) + 1
        return cls(tuple(counts.items()))

    def swapped(self) -> "QTPolynomial":
        """Exchange the roles of q and t."""
        return QTPolynomial(tuple(((j, i), c) for (i, j), c in self.terms))

    def coefficient(self, i: int, j: int) -> int:
        return dict(self.terms).get((i, j), 0)

    def evaluate(self, q: int, t: int) -> int:
        return sum(c * q**i * t**j for (i, j), c in self.terms)


def qt_catalan(a: int, b: int, *, rank_variant: str = "core") -> QTPolynomial:
    """Sum of q^rank t^(co-skew-length) over all paths."""
    rank_fn = core_rank if rank_variant == "core" else path_rank
    return QTPolynomial.from_exponent_pairs(
        (rank_fn(p), co_skew_length(p)) for p in enumerate_paths(a, b)
    )


def qt_symmetry_check(a: int, b: int, *, rank_variant: str = "core") -> bool:
    poly = qt_catalan(a, b, rank_variant=rank_variant)
    return poly == poly.swapped()


# ---------------------------------------------------------------------------
# Bijectivity telemetry


@dataclass
class BijectivityReport:
    """Findings of the exhaustive zeta scan on one dimension pair."""

    a: int
    b: int
    path_count: int
    image_count: int
    injective: bool
    sl_transport_ok: bool
    dinv_transport_ok: bool
    collisions: tuple[tuple[str, str], ...] = ()
    pair_uniqueness: dict[str, int] | None = None

    @property
    def ok(self) -> bool:
        if not (self.injective and self.sl_transport_ok and self.dinv_transport_ok):
            return False
        if self.pair_uniqueness is not None:
            return all(v == 1 for v in self.pair_uniqueness.values())
        return True

    def to_json(self) -> dict:
        data = {
            "a": self.a,
            "b": self.b,
            "paths": self.path_count,
            "images": self.image_count,
            "injective": self.injective,
            "sl_transport_ok": self.sl_transport_ok,
            "dinv_transport_ok": self.dinv_transport_ok,
            "collisions": [list(c) for c in self.collisions],
        }
        if self.pair_uniqueness is not None:
            data["pair_uniqueness"] = self.pair_uniqueness
        return data


def bijectivity_report(a: int, b: int, *, unique_pair_scan: bool = False) -> BijectivityReport:
    """Scan zeta over every path: injectivity, statistic transport, and
    optionally the per-image count of partners R accepted by iota."""
    paths = enumerate_paths(a, b)
    images: dict[DyckPath, DyckPath] = {}
    collisions = []
    sl_ok = True
    dinv_ok = True
    for p in paths:
        q = zeta(p)
        if q in images:
            collisions.append((str(images[q]), str(p)))
        else:
            images[q] = p
        if skew_length(p) != coarea(q):
            sl_ok = False
        if dinv(p) != area(q):
            dinv_ok = False

    uniqueness = None
    if unique_pair_scan:
        uniqueness = {}
        for q in images:
            count = 0
            for r in paths:
                try:
                    iota(q, r)
                except DyckError:
                    continue
                count += 1
            uniqueness[str(q)] = count

    assert len(paths) == rational_catalan_number(a, b)
    return BijectivityReport(
        a=a,
        b=b,
        path_count=len(paths),
        image_count=len(images),
        injective=len(images) == len(paths),
        sl_transport_ok=sl_ok,
        dinv_transport_ok=dinv_ok,
        collisions=tuple(collisions),
        pair_uniqueness=uniqueness,
    )
