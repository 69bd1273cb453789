from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexsieve import is_prime, nth_prime, prime_row_index, primes_upto, row_prime
from hexsieve.errors import InvalidPrime, LimitExceeded
from hexsieve.oracle import is_prime_trial
from hexsieve.primes import PrimeCache


def test_nth_small():
    assert [nth_prime(i) for i in range(1, 8)] == [2, 3, 5, 7, 11, 13, 17]
    with pytest.raises(ValueError):
        nth_prime(0)


def test_row_primes():
    assert row_prime(1) == 5
    assert row_prime(2) == 7
    assert row_prime(8) == 29
    trial = [v for v in range(2, 200) if is_prime_trial(v)]
    assert row_prime(25) == trial[26] == 103  # the 27th prime


def test_is_prime_agrees_with_trial_division():
    for v in range(5000):
        assert is_prime(v) == is_prime_trial(v), v


@given(st.integers(min_value=0, max_value=10**7))
@settings(max_examples=150, deadline=None)
def test_is_prime_agrees_with_trial_division_property(v):
    assert is_prime(v) == is_prime_trial(v)


def test_is_prime_large_known_values():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    # smallest composite passing bases up to 23; bases 29..37 catch it
    assert not is_prime(3825123056546413051)


def test_primes_upto():
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_upto(1) == []


def test_prime_row_index_roundtrip():
    for k in range(1, 301):
        assert prime_row_index(row_prime(k)) == k


def test_prime_row_index_rejects_non_row_primes():
    for p in (2, 3, 4, 35):
        with pytest.raises(InvalidPrime):
            prime_row_index(p)


def test_cache_growth_hits_configured_bound():
    cache = PrimeCache(max_value=100)
    assert cache.nth(25) == 97
    with pytest.raises(LimitExceeded):
        cache.nth(26)
    with pytest.raises(LimitExceeded):
        cache.upto(101)


def test_cache_supports_concurrent_readers():
    cache = PrimeCache()
    expected = [nth_prime(i) for i in range(1, 2001)]
    with ThreadPoolExecutor(max_workers=8) as pool:
        got = list(pool.map(cache.nth, range(1, 2001)))
    assert got == expected
