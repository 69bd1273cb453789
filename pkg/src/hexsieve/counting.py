"""Prime counting, the prime-square counting function, and their links.

``prime_count`` reads a cached sieve run; ``prime_square_count`` walks
the ascending row primes instead, so the two sides of the identity
prime_count(x) == prime_square_count(x*x) + 2 (valid for x >= 3) are
computed by independent paths.  Both accept real arguments with floor
semantics.
"""

import csv
import threading
from dataclasses import dataclass
from math import floor, isfinite, isqrt, log, sqrt
from typing import Iterable, Optional, TextIO

import numpy as np

from . import sieve
from .errors import DomainError
from .grid import row_prime
from .primes import primes_upto
from .wheel import count_upto

MERTENS_CONSTANT = 0.2614972128476427

#: constants_id -> (lower factor a, upper factor A, validity threshold).
#: "rosser-schoenfeld" is sharp enough to assert from its threshold on;
#: "chebyshev-generic" has no effective threshold and is report-only.
CONSTANT_PAIRS = {
    "rosser-schoenfeld": (1.0, 1.25506, 289.0),
    "chebyshev-generic": (0.9212, 1.1056, 9.0),
}

_cache_lock = threading.Lock()
_cached_marks: Optional[tuple[int, np.ndarray]] = None  # (limit, marks)


def _marks_for(limit: int) -> np.ndarray:
    """Mark array of a sieve run covering ``limit``, grown by doubling."""
    global _cached_marks
    with _cache_lock:
        if _cached_marks is not None and _cached_marks[0] >= limit:
            return _cached_marks[1]
        target = max(limit, 5)
        if _cached_marks is not None:
            target = max(target, 2 * _cached_marks[0])
        marks = sieve.sieve_state(target).marks
        _cached_marks = (target, marks)
        return marks


def _to_floor(x) -> int:
    if isinstance(x, float) and not isfinite(x):
        raise ValueError(f"argument must be finite, got {x}")
    return floor(x)


def prime_count(x) -> int:
    """Number of primes <= x (floor semantics for real x, 0 below 2)."""
    m = _to_floor(x)
    if m < 2:
        return 0
    if m < 3:
        return 1
    if m < 5:
        return 2
    w = count_upto(m)
    marks = _marks_for(m)
    return 2 + int(np.count_nonzero(~marks[1:w + 1]))


def prime_square_count(x) -> int:
    """Number of squares of primes >= 5 that are <= x (floor semantics).

    Counted by walking the ascending row primes until the square passes
    x; this never consults the mark array that backs prime_count.
    """
    m = _to_floor(x)
    if m < 25:
        return 0
    s = isqrt(m)
    k = 1
    while row_prime(k) <= s:
        k += 1
    return k - 1


def check_pi_identity(x) -> bool:
    """True iff prime_count(x) == prime_square_count(x*x) + 2; needs x >= 3."""
    if x < 3:
        raise DomainError(f"the identity needs x >= 3, got {x}")
    return prime_count(x) == prime_square_count(x * x) + 2


def check_gap_identity(x) -> bool:
    """True iff the prime count between x^2 and (x+1)^2 equals the
    prime-square count between x^4 and (x+1)^4; needs x*x >= 3."""
    if x * x < 3:
        raise DomainError(f"the gap identity needs x*x >= 3, got {x}")
    lhs = prime_count((x + 1) ** 2) - prime_count(x ** 2)
    rhs = prime_square_count((x + 1) ** 4) - prime_square_count(x ** 4)
    return lhs == rhs


@dataclass(frozen=True)
class BoundsReport:
    x: float
    pi: int
    pi_mt: int
    lower: float
    upper: float
    lower_holds: bool
    upper_holds: bool
    constants_id: str


def bounds_report(x, constants_id: str = "rosser-schoenfeld") -> BoundsReport:
    """Evaluate 2a*sqrt(x)/ln x - 2 < prime_square_count(x) < 2A*sqrt(x)/ln x - 2.

    The constant pair and its validity threshold are selected by
    ``constants_id``; arguments below the threshold raise DomainError.
    """
    try:
        a, big_a, threshold = CONSTANT_PAIRS[constants_id]
    except KeyError:
        raise ValueError(
            f"unknown constants_id {constants_id!r}; choose from {sorted(CONSTANT_PAIRS)}"
        ) from None
    if x < threshold:
        raise DomainError(f"{constants_id} bounds need x >= {threshold:g}, got {x}")
    squares = prime_square_count(x)
    lower = 2 * a * sqrt(x) / log(x) - 2
    upper = 2 * big_a * sqrt(x) / log(x) - 2
    return BoundsReport(
        x=float(x),
        pi=prime_count(x),
        pi_mt=squares,
        lower=lower,
        upper=upper,
        lower_holds=lower < squares,
        upper_holds=squares < upper,
        constants_id=constants_id,
    )


def leading_element_bounds(k: int, b: float, B: float) -> tuple[float, int, float]:
    """Sandwich (b*(k+2)^2*ln^2(k+2), square of row k's prime, B*...).

    The caller supplies the constants; ``calibrate_square_bounds`` fits a
    pair that makes the sandwich hold over a chosen range by construction.
    """
    if k < 1:
        raise ValueError(f"grid row must be >= 1, got {k}")
    if not 0 < b < B:
        raise ValueError(f"need 0 < b < B, got b={b}, B={B}")
    base = (k + 2) ** 2 * log(k + 2) ** 2
    return b * base, row_prime(k) ** 2, B * base


def calibrate_square_bounds(k_max: int) -> tuple[float, float]:
    """(min, max) of square / ((k+2)^2 ln^2 (k+2)) over rows 1..k_max."""
    if k_max < 1:
        raise ValueError(f"calibration range must be >= 1, got {k_max}")
    ratios = [
        row_prime(k) ** 2 / ((k + 2) ** 2 * log(k + 2) ** 2)
        for k in range(1, k_max + 1)
    ]
    return min(ratios), max(ratios)


@dataclass(frozen=True)
class MertensResult:
    x: float
    sum: float
    predicted: float
    residual: float


def mertens_sum(x) -> MertensResult:
    """Sum of 1/p over primes p <= x, against the ln ln x law.

    Summation is plain left-to-right over the ascending primes so the
    float result is reproducible on a given platform; ``predicted`` is
    MERTENS_CONSTANT + ln ln x and ``residual`` their difference.
    """
    if x <= 2:
        raise ValueError(f"the sum needs x > 2, got {x}")
    total = 0.0
    for p in primes_upto(_to_floor(x)):
        total += 1.0 / p
    predicted = MERTENS_CONSTANT + log(log(x))
    return MertensResult(float(x), total, predicted, total - predicted)


def asymptotic_ratios(xs: Iterable[float]) -> list[tuple[float, float, float]]:
    """(x, r1, r2) per grid point, where r1 compares the prime-square
    count against 2*sqrt(x)/ln x and r2 compares the prime count against
    (sqrt(x)/2) times the prime-square count.

    Both ratios drift toward 1 as x grows; callers report the trend
    rather than asserting pointwise closeness.
    """
    out = []
    for x in xs:
        if x < 25:
            raise ValueError(f"ratio grid points must be >= 25, got {x}")
        squares = prime_square_count(x)
        r1 = squares / (2 * sqrt(x) / log(x))
        r2 = prime_count(x) / (sqrt(x) / 2 * squares)
        out.append((float(x), r1, r2))
    return out


def report_row(x, constants_id: str = "rosser-schoenfeld") -> dict:
    """One combined bounds-and-ratios row keyed by the CSV column names."""
    rep = bounds_report(x, constants_id)
    (_, r1, r2), = asymptotic_ratios([x])
    return {
        "x": rep.x,
        "pi": rep.pi,
        "pi_mt": rep.pi_mt,
        "lower": rep.lower,
        "upper": rep.upper,
        "r1": r1,
        "r2": r2,
    }


CSV_COLUMNS = ["x", "pi", "pi_mt", "lower", "upper", "r1", "r2"]


def write_report_csv(rows: Iterable[dict], fh: TextIO) -> None:
    """CSV export with header ``x,pi,pi_mt,lower,upper,r1,r2``."""
    w = csv.writer(fh)
    w.writerow(CSV_COLUMNS)
    for row in rows:
        w.writerow([
            f"{row['x']:g}", row["pi"], row["pi_mt"],
            f"{row['lower']:.6f}", f"{row['upper']:.6f}",
            f"{row['r1']:.6f}", f"{row['r2']:.6f}",
        ])
