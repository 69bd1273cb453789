"""Closed-form access to the product grid of wheel composites.

Row k of the grid holds the products p(k) * w over all wheel values w,
where p(k) is the (k+2)-th prime (5, 7, 11, ... for k = 1, 2, 3, ...).
Every entry is a composite of the form 6h +/- 1 and every such
composite occurs in the grid, once per distinct prime factor.

Entry flags:

* ``leading``: the entry is the square of its row prime, the first
  value the sieve crosses out in that row.
* ``defining``: the entry is a semiprime not divisible by 5.  Since one
  factor is always the row prime, this holds exactly when the entry's
  wheel cofactor is a prime other than 5; columns are therefore either
  all defining (below row 1) or not defining at all.

Values are kept within the unsigned 64-bit range; larger products raise
OverflowError rather than silently widening, so grid runs stay cheap.
The exact-arithmetic block module has no such cap.
"""

from dataclasses import dataclass

from .primes import _shared, is_prime
from .wheel import is_wheel_value, wheel_index, wheel_value

UINT64_MAX = 2**64 - 1


def row_prime(k: int) -> int:
    """Prime of grid row k: the (k+2)-th prime, so row_prime(1) == 5."""
    if k < 1:
        raise ValueError(f"grid row must be >= 1, got {k}")
    return _shared.nth(k + 2)


@dataclass(frozen=True)
class Entry:
    row: int
    col: int
    value: int
    is_defining: bool
    is_leading: bool


@dataclass(frozen=True)
class Occurrence:
    """Position (row, col) at which a queried value appears in the grid."""

    row: int
    col: int


def _checked_value(p: int, w: int, k: int, n: int) -> int:
    value = p * w
    if value > UINT64_MAX:
        raise OverflowError(
            f"grid entry ({k},{n}) = {p}*{w} exceeds the unsigned 64-bit range")
    return value


def element(k: int, n: int) -> Entry:
    """Grid entry at row k, column n, with classification flags."""
    p = row_prime(k)
    w = wheel_value(n)
    value = _checked_value(p, w, k, n)
    return Entry(k, n, value, value % 5 != 0 and is_prime(w), w == p)


def classify(k: int, n: int) -> tuple[bool, bool]:
    """(defining, leading) flags of entry (k, n).

    Defining is decided by the cofactor test: the row prime is prime by
    construction, so the entry is a semiprime exactly when its wheel
    cofactor is prime.
    """
    p = row_prime(k)
    w = wheel_value(n)
    value = _checked_value(p, w, k, n)
    return value % 5 != 0 and is_prime(w), w == p


def leading_col(k: int) -> int:
    """Column holding row k's square, i.e. the wheel position of its prime."""
    return wheel_index(row_prime(k))


def occurrences(v: int, max_row: int) -> list[Occurrence]:
    """All grid positions (k, n) with k <= max_row holding the value v.

    A row k holds v exactly when its prime divides v and the cofactor is
    a wheel value.  Intended for v >= 25 (smaller values never occur);
    primes never occur at all, so they yield an empty list.
    """
    out = []
    k = 1
    while k <= max_row:
        p = row_prime(k)
        if p * 5 > v:
            break
        cof, rem = divmod(v, p)
        if rem == 0 and is_wheel_value(cof):
            out.append(Occurrence(k, wheel_index(cof)))
        k += 1
    return out
