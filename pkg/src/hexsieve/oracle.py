"""Brute-force reference implementations for the verification suites.

Deliberately slow and obvious: trial division everywhere, no caches.
Inputs are capped so an accidental huge argument fails fast instead of
spinning.
"""

from dataclasses import dataclass

from .errors import CapExceeded

INPUT_CAP = 10**7


def _check_cap(v: int) -> None:
    if v > INPUT_CAP:
        raise CapExceeded(f"oracle input {v} exceeds the cap {INPUT_CAP}")


def is_prime_trial(v: int) -> bool:
    """True iff v >= 2 and no d in [2, sqrt(v)] divides v."""
    _check_cap(v)
    if v < 2:
        return False
    if v % 2 == 0:
        return v == 2
    if v % 3 == 0:
        return v == 3
    d = 5
    while d * d <= v:
        if v % d == 0 or v % (d + 2) == 0:
            return False
        d += 6
    return True


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[int, ...]  # ascending, with multiplicity


def factorize(v: int) -> Factorization:
    """Prime factors of v >= 2 by naive trial division."""
    _check_cap(v)
    if v < 2:
        raise ValueError(f"nothing to factor below 2, got {v}")
    factors = []
    rem = v
    d = 2
    while d * d <= rem:
        while rem % d == 0:
            factors.append(d)
            rem //= d
        d += 1
    if rem > 1:
        factors.append(rem)
    return Factorization(v, tuple(factors))


def composites_6h(n: int) -> list[int]:
    """All composite wheel numbers (v = 6h +/- 1, so v >= 25) up to n."""
    _check_cap(n)
    return [v for v in range(25, n + 1) if v % 6 in (1, 5) and not is_prime_trial(v)]


def is_defining_oracle(v: int) -> bool:
    """Defining test straight from the definition: 5 does not divide v
    and v is a product of exactly two primes."""
    return v % 5 != 0 and len(factorize(v).factors) == 2
