"""Hyperelliptic Hodge integrals D(i, k) and d(i, k), two ways.

For k = 2g + 2 branch points, D(i, k) is the integral of psi_1**(k-3-i) *
lambda_i over the k-pointed hyperelliptic locus (all marked points are
Weierstrass points), pulled back along the branch map; d(i, k) is the
integral of psi**(k-2-i) * lambda_i on the variant carrying one extra
conjugate pair of points, with the psi-class at the pair's image.  The psi
exponents are the complementary degrees to lambda_i on spaces of dimension
k - 3 and k - 2, so each integrand has top degree and the values are plain
rationals.

Closed forms:

    D(i, k) = (1/2)**(i+1) * e_i(1, 3, ..., k-3)
    d(i, k) = (1/2)**(i+1) * e_i(2, 4, ..., k-2)

Recursions (from the vanishing localization integrals; see localization.py
for the graph-sum derivation of the same formulas):

    D(i, k) = 2 * sum over odd j in 1..k-3 of
                  C(k-3, j) * sum((-1)**l * d(i-l, k-1-j) * d(l, j+1))
            - 2 * sum over even j in 2..k-4 of
                  C(k-3, j) * sum((-1)**l * D(i-l, k-j) * D(l, j+2))

    d(i, k) = 2 * sum over odd j in 1..k-3 of
                  C(k-2, j) * sum((-1)**l * D(i-l, k-j+1) * D(l, j+1))
            - 2 * sum over even j in 2..k-2 of
                  C(k-2, j) * sum((-1)**l * d(i-l, k-j) * d(l, j))

with inner sums over l in 0..i.  Base values: D(1, 4) = 1/4 and
D(0, k) = d(0, k) = 1/2; the k = 2 conventions (1/2 for i = 0, else 0) make
the recursions' extreme summands match the degenerate graphs they encode.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional

from .algebra import HALF, Rational, ZERO
from .errors import DomainError, VerificationError
from .symmetric import elementary

QUARTER = Fraction(1, 4)

#: Test hook: keys mapped here shadow the genuine base values, letting the
#: verification suites demonstrate failure detection.  Leave empty.
FAULT_INJECTION: dict["HodgeValueKey", Rational] = {}


@dataclass(frozen=True)
class HodgeValueKey:
    """Index of one integral: kind 'D' or 'd', lambda index i, k points."""

    kind: str
    i: int
    k: int

    def __post_init__(self):
        if self.kind not in ("D", "d"):
            raise DomainError(f"kind must be 'D' or 'd', not {self.kind!r}")
        if self.i < 0:
            raise DomainError("lambda index i must be >= 0")
        if self.k < 2 or self.k % 2:
            raise DomainError("k must be an even integer >= 2")

    @property
    def genus(self) -> int:
        """g = (k - 2) / 2; values with i > g vanish."""
        return (self.k - 2) // 2


class MemoTable:
    """Write-once map from HodgeValueKey to Rational.

    Concurrent duplicate computation of a key is harmless (both writers hold
    the identical value), but overwriting a stored key with a different value
    is always a bug and raises.
    """

    def __init__(self):
        self._values: dict[HodgeValueKey, Rational] = {}

    def get(self, key: HodgeValueKey) -> Optional[Rational]:
        return self._values.get(key)

    def set(self, key: HodgeValueKey, value: Rational) -> None:
        existing = self._values.get(key)
        if existing is not None and existing != value:
            raise VerificationError(
                f"memo overwrite for {key}: had {existing}, got {value}",
                key=key, expected=existing, computed=value)
        self._values[key] = value

    def __contains__(self, key: HodgeValueKey) -> bool:
        return key in self._values

    def __len__(self) -> int:
        return len(self._values)


def _check_even_k(k: int, minimum: int) -> None:
    if k % 2:
        raise DomainError(f"k must be even, got {k}")
    if k < minimum:
        raise DomainError(f"k must be >= {minimum}, got {k}")


@lru_cache(maxsize=None)
def closed_D(i: int, k: int) -> Rational:
    """(1/2)**(i+1) * e_i(1, 3, ..., k-3); zero once i exceeds (k-2)/2."""
    _check_even_k(k, 4)
    if i < 0:
        raise DomainError("lambda index i must be >= 0")
    return Fraction(1, 2 ** (i + 1)) * elementary(i, range(1, k - 2, 2))


@lru_cache(maxsize=None)
def closed_d(i: int, k: int) -> Rational:
    """(1/2)**(i+1) * e_i(2, 4, ..., k-2); zero once i exceeds (k-2)/2."""
    _check_even_k(k, 2)
    if i < 0:
        raise DomainError("lambda index i must be >= 0")
    return Fraction(1, 2 ** (i + 1)) * elementary(i, range(2, k - 1, 2))


def base_value(key: HodgeValueKey) -> Optional[Rational]:
    """The stored base value for ``key``, or None when the recursion is needed.

    Covers: the vanishing i > g, the shared value D(0, k) = d(0, k) = 1/2,
    D(1, 4) = 1/4, and the k = 2 boundary convention (1/2 for i = 0, else 0,
    already subsumed by the first two rules).
    """
    injected = FAULT_INJECTION.get(key)
    if injected is not None:
        return injected
    if key.i > key.genus:
        return ZERO
    if key.i == 0:
        return HALF
    if key.kind == "D" and key.i == 1 and key.k == 4:
        return QUARTER
    return None


def recursive_D(i: int, k: int, memo: Optional[MemoTable] = None) -> Rational:
    """D(i, k) via the recursion, through base values and the memo table."""
    _check_even_k(k, 2)
    if memo is None:
        memo = MemoTable()
    return _resolve(HodgeValueKey("D", i, k), memo)


def recursive_d(i: int, k: int, memo: Optional[MemoTable] = None) -> Rational:
    """d(i, k) via the recursion, through base values and the memo table."""
    _check_even_k(k, 2)
    if memo is None:
        memo = MemoTable()
    return _resolve(HodgeValueKey("d", i, k), memo)


def _resolve(key: HodgeValueKey, memo: MemoTable) -> Rational:
    base = base_value(key)
    if base is not None:
        return base
    cached = memo.get(key)
    if cached is not None:
        return cached
    if key.kind == "D":
        if key.k < 6:
            raise DomainError(f"no recursion applies to {key}")
        value = _recursion_D(key.i, key.k, memo)
    else:
        if key.k < 4:
            raise DomainError(f"no recursion applies to {key}")
        value = _recursion_d(key.i, key.k, memo)
    memo.set(key, value)
    return value


def _signed_split(kind1: str, k1: int, kind2: str, k2: int, i: int,
                  memo: MemoTable) -> Rational:
    # sum((-1)**l * V(i-l, k1) * V(l, k2)), the lambda-class splitting sum
    total = ZERO
    sign = 1
    for ell in range(i + 1):
        a = _resolve(HodgeValueKey(kind1, i - ell, k1), memo)
        if a:
            b = _resolve(HodgeValueKey(kind2, ell, k2), memo)
            if b:
                term = a * b
                total = total + term if sign > 0 else total - term
        sign = -sign
    return total


def _recursion_D(i: int, k: int, memo: MemoTable) -> Rational:
    odd_part = ZERO
    for j in range(1, k - 2, 2):
        odd_part += comb(k - 3, j) * _signed_split("d", k - 1 - j, "d", j + 1,
                                                   i, memo)
    even_part = ZERO
    for j in range(2, k - 3, 2):
        even_part += comb(k - 3, j) * _signed_split("D", k - j, "D", j + 2,
                                                    i, memo)
    return 2 * odd_part - 2 * even_part


def _recursion_d(i: int, k: int, memo: MemoTable) -> Rational:
    odd_part = ZERO
    for j in range(1, k - 2, 2):
        odd_part += comb(k - 2, j) * _signed_split("D", k - j + 1, "D", j + 1,
                                                   i, memo)
    even_part = ZERO
    for j in range(2, k - 1, 2):
        even_part += comb(k - 2, j) * _signed_split("d", k - j, "d", j,
                                                    i, memo)
    return 2 * odd_part - 2 * even_part


def closed_value(key: HodgeValueKey) -> Rational:
    """Closed form for any key (k = 2 falls back to the boundary convention)."""
    if key.k == 2:
        return HALF if key.i == 0 else ZERO
    if key.kind == "D":
        return closed_D(key.i, key.k)
    return closed_d(key.i, key.k)


def table(max_k: int) -> list[tuple[HodgeValueKey, Rational]]:
    """Every D and d value for 4 <= k <= max_k, cross-checked both routes.

    Each value is computed by the closed form and by the recursion (bottom-up
    in k, so the memo table is filled in dependency order); a mismatch raises
    VerificationError naming the key and both values.  Rows come back sorted
    by (kind, k, i).
    """
    _check_even_k(max_k, 4)
    memo = MemoTable()
    rows: list[tuple[HodgeValueKey, Rational]] = []
    for k in range(4, max_k + 1, 2):
        for kind in ("D", "d"):  # D first: d(*, k) depends on D(*, k)
            for i in range((k - 2) // 2 + 1):
                key = HodgeValueKey(kind, i, k)
                closed = closed_value(key)
                recursive = _resolve(key, memo)
                if closed != recursive:
                    raise VerificationError(
                        f"closed/recursive mismatch for {key}: "
                        f"closed {closed}, recursive {recursive}",
                        key=key, expected=closed, computed=recursive)
                rows.append((key, closed))
    rows.sort(key=lambda row: (row[0].kind, row[0].k, row[0].i))
    return rows
