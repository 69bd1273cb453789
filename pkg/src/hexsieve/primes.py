"""Prime supply: a growable cached table plus fast deterministic primality.

The table is produced by the wheel sieve and grows by doubling the
sieved bound, so repeated demand is amortized.  Readers never block;
extension swaps in a fresh list under a lock.
"""

import threading
from bisect import bisect_left, bisect_right
from functools import lru_cache
from math import log

from . import sieve
from .errors import InvalidPrime, LimitExceeded

# Witness set that makes Miller-Rabin deterministic for all n < 3.3e24,
# comfortably covering the 64-bit value range used by the grid.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=1 << 16)
def is_prime(v: int) -> bool:
    """Deterministic Miller-Rabin primality for v < 2**64."""
    if v < 2:
        return False
    for p in _MR_BASES:
        if v % p == 0:
            return v == p
    d = v - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, v)
        if x in (1, v - 1):
            continue
        for _ in range(s - 1):
            x = x * x % v
            if x == v - 1:
                break
        else:
            return False
    return True


class PrimeCache:
    """Ascending table of primes with synchronized, amortized extension.

    ``max_value`` bounds how far the table may ever be sieved; demand
    beyond it raises LimitExceeded.
    """

    def __init__(self, max_value: int = 2**32):
        if max_value < 16:
            raise ValueError("max_value too small to seed the prime table")
        self.max_value = max_value
        self._lock = threading.Lock()
        self._bound = min(512, max_value)
        self._primes = sieve.run_sieve(self._bound)[0]

    def _extend_to_value(self, x: int) -> None:
        with self._lock:
            if x <= self._bound:
                return
            bound = min(max(x, 2 * self._bound), self.max_value)
            self._primes = sieve.run_sieve(bound)[0]
            self._bound = bound

    @staticmethod
    def _nth_upper_bound(i: int) -> int:
        # Rosser: p_i < i*(ln i + ln ln i) for i >= 6.
        if i < 6:
            return 13
        return int(i * (log(i) + log(log(i)))) + 1

    def nth(self, i: int) -> int:
        """The i-th prime, 1-based (nth(1) = 2)."""
        if i < 1:
            raise ValueError(f"prime index must be >= 1, got {i}")
        table = self._primes
        while i > len(table):
            if self._bound >= self.max_value:
                raise LimitExceeded(
                    f"prime #{i} lies beyond the cache bound {self.max_value}")
            target = max(self._nth_upper_bound(i), 2 * self._bound)
            self._extend_to_value(min(target, self.max_value))
            table = self._primes
        return table[i - 1]

    def upto(self, x: int) -> list[int]:
        """All primes <= x, ascending."""
        if x > self.max_value:
            raise LimitExceeded(f"{x} exceeds the cache bound {self.max_value}")
        if x > self._bound:
            self._extend_to_value(x)
        table = self._primes
        return table[:bisect_right(table, x)]

    def index_of(self, p: int) -> int:
        """1-based position of the prime p in the ascending prime sequence."""
        if p > self.max_value:
            raise LimitExceeded(f"{p} exceeds the cache bound {self.max_value}")
        if p > self._bound:
            self._extend_to_value(p)
        table = self._primes
        i = bisect_left(table, p)
        if i == len(table) or table[i] != p:
            raise InvalidPrime(f"{p} is not prime")
        return i + 1


_shared = PrimeCache()


def nth_prime(i: int) -> int:
    return _shared.nth(i)


def primes_upto(x: int) -> list[int]:
    return _shared.upto(x)


def prime_row_index(p: int) -> int:
    """Grid row whose prime is p, i.e. the k with nth_prime(k + 2) == p."""
    if p < 5:
        raise InvalidPrime(f"grid row primes start at 5, got {p}")
    return _shared.index_of(p) - 2
