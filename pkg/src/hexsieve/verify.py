"""Invariant suites behind the ``verify`` CLI verb.

Each suite re-derives a family of structural facts at a caller-chosen
size and returns (label, passed, detail) triples; the labels name the
fact being checked so a failure line is self-describing.  Brute-force
sides always go through the oracle module, never through the code path
under test.
"""

import random
from bisect import bisect_right
from math import isqrt, log
from typing import Callable

import numpy as np

from . import blocks, counting, grid, oracle, sieve
from .errors import CapExceeded
from .primes import prime_row_index
from .wheel import wheel_index, wheel_value

Check = tuple[str, bool, str]

CORE_CAP = 1000
SIEVE_CAP = 10**6
COUNTING_CAP = 4000
MATRIX_CAP = 300

DEFAULT_LIMITS = {"core": 300, "sieve": 10_000, "counting": 2000, "matrix": 100}


def _check_cap(suite: str, limit: int, cap: int) -> None:
    if limit > cap:
        raise CapExceeded(f"suite {suite!r} is capped at limit {cap}, got {limit}")
    if limit < 2:
        raise CapExceeded(f"suite {suite!r} needs limit >= 2, got {limit}")


def _all(label: str, failures: list[str], scope: str) -> Check:
    if failures:
        return (label, False, f"{len(failures)} failure(s), first: {failures[0]}")
    return (label, True, scope)


def core_suite(limit: int = 300) -> list[Check]:
    """Wheel closed forms, entry residues, leading/defining structure."""
    _check_cap("core", limit, CORE_CAP)
    checks: list[Check] = []
    span = min(limit * limit, 100_000)

    bad = [str(n) for n in range(1, span + 1)
           if wheel_value(n) != 5 + 2 * (n // 2) + 4 * ((n - 1) // 2)]
    checks.append(_all("wheel-dual-form", bad, f"n <= {span}"))

    bad = [str(n) for n in range(1, span + 1) if wheel_index(wheel_value(n)) != n]
    checks.append(_all("wheel-bijection", bad, f"n <= {span}"))

    primes = [grid.row_prime(k) for k in range(1, limit + 1)]
    wheels = [wheel_value(n) for n in range(1, limit + 1)]

    bad = [f"({k},{n})" for k, p in enumerate(primes, 1)
           for n, w in enumerate(wheels, 1) if (p * w) % 6 not in (1, 5)]
    checks.append(_all("entry-mod6", bad, f"block {limit}x{limit}"))

    bad = []
    for k, p in enumerate(primes, 1):
        hits = [n for n in range(1, wheel_index(p) + 1)
                if grid.classify(k, n)[1]]
        if hits != [wheel_index(p)]:
            bad.append(f"row {k}: {hits}")
    checks.append(_all("leading-unique-per-row", bad, f"rows 1..{limit}"))

    first_col = [grid.element(k, 1).value for k in range(1, limit + 1)]
    first_row = [grid.element(1, n).value for n in range(1, limit + 1)]
    bad = []
    for k in range(1, limit + 1):
        for n in range(1, limit + 1):
            if grid.classify(k, n)[1] != (first_col[k - 1] == first_row[n - 1]):
                bad.append(f"({k},{n})")
    checks.append(_all("leading-cross-equality", bad, f"block {limit}x{limit}"))

    bad = []
    for n, w in enumerate(wheels, 1):
        flags = {grid.classify(k, n)[0] for k in range(2, limit + 1)}
        if len(flags) != 1:
            bad.append(f"col {n}: mixed")
        elif n >= 2 and flags != {oracle.is_prime_trial(w)}:
            # column 1 (wheel value 5) is all multiples of 5, never defining
            bad.append(f"col {n}: prime link")
    checks.append(_all("column-dichotomy", bad, f"cols 1..{limit}, rows 2..{limit}"))

    row1 = [grid.classify(1, n)[0] for n in range(1, limit + 1)]
    ok = not any(row1) and grid.element(1, 1).is_leading
    checks.append(("first-row-never-defining", ok, f"cols 1..{limit}"))

    bad = []
    for k in range(1, limit + 1):
        for n in range(1, limit + 1):
            e = grid.element(k, n)
            if e.is_defining != oracle.is_defining_oracle(e.value):
                bad.append(f"({k},{n})={e.value}")
    checks.append(_all("defining-matches-semiprime-oracle", bad, f"block {limit}x{limit}"))

    return checks


def _oracle_primes(n: int) -> list[int]:
    return [v for v in range(2, n + 1) if oracle.is_prime_trial(v)]


def sieve_suite(limit: int = 10_000) -> list[Check]:
    """Sieve output, space formula, offsets, per-stage counters."""
    _check_cap("sieve", limit, SIEVE_CAP)
    if limit < 5:
        raise CapExceeded(f"suite 'sieve' needs limit >= 5, got {limit}")
    checks: list[Check] = []

    sweep = min(limit, 10_000)
    ref = _oracle_primes(sweep)
    bad = []
    for n in range(5, sweep + 1):
        got = sieve.run_sieve(n)[0]
        want = ref[:_count_leq(ref, n)]
        if got != want:
            bad.append(f"n={n}")
            break
    checks.append(_all("oracle-equivalence", bad, f"all n in 5..{sweep}"))

    if limit > sweep:
        got = sieve.run_sieve(limit)[0]
        want = _oracle_primes(limit)
        checks.append(("oracle-equivalence-spot", got == want, f"n={limit}"))

    span = min(limit, 100_000)
    wheel_list = _wheel_values_upto(span)
    bad = []
    for n in range(5, span + 1):
        if sieve.space_bound(n) != 1 + _count_leq(wheel_list, n):
            bad.append(f"n={n}")
            break
    checks.append(_all("space-formula-exact", bad, f"5 <= n <= {span}"))

    bad = [str(n) for n in range(5, span + 1) if not sieve.space_bound(n) < n]
    checks.append(_all("space-below-limit", bad, f"5 <= n <= {span}"))

    bad = []
    for p, pattern in ((5, (2, 4)), (7, (4, 2)), (11, (2, 4)), (13, (4, 2))):
        if _take(sieve.cross_offsets(p), 1000) != _cumulative(pattern, 1000):
            bad.append(f"p={p}")
    checks.append(_all("offset-closed-forms", bad, "first 1000 terms, both classes"))

    n = min(limit, 2000)
    state = sieve.sieve_state(n)
    bad = []
    for s in state.stats:
        start = wheel_index(s.prime)
        tail = []
        j = start
        while s.prime * wheel_value(j) <= n:
            tail.append(s.prime * wheel_value(j))
            j += 1
        from_offsets = []
        for off in sieve.cross_offsets(s.prime):
            v = s.prime * s.prime + off * s.prime
            if v > n:
                break
            from_offsets.append(v)
        if tail != from_offsets or len(tail) != s.crossed:
            bad.append(f"stage {s.stage}")
    checks.append(_all("stage-crossings-are-row-tails", bad, f"n={n}"))

    state = sieve.sieve_state(min(limit, 100_000))
    n = state.limit
    bad = []
    for s in state.stats:
        if s.crossed != s.appearances - s.skipped:
            bad.append(f"stage {s.stage}: crossed")
        if not s.appearances < n / (3 * s.prime):
            bad.append(f"stage {s.stage}: appearances bound")
        if s.skipped != wheel_index(s.prime) - 1:
            bad.append(f"stage {s.stage}: skipped")
    if state.stats and state.stats[0].skipped != 0:
        bad.append("stage 1 skip count nonzero")
    total = sum(s.crossed for s in state.stats)
    witness = n / 3 * sum(1 / s.prime for s in state.stats)
    if not total <= witness:
        bad.append("aggregate crossing bound")
    checks.append(_all("stage-counter-identities", bad, f"n={n}"))

    return checks


def counting_suite(limit: int = 2000) -> list[Check]:
    """Counting identities, floor semantics, bounds, Mertens envelope."""
    _check_cap("counting", limit, COUNTING_CAP)
    if limit < 3:
        raise CapExceeded(f"suite 'counting' needs limit >= 3, got {limit}")
    checks: list[Check] = []

    bad = [str(x) for x in range(3, limit + 1) if not counting.check_pi_identity(x)]
    checks.append(_all("prime-vs-square-identity", bad, f"integer x in 3..{limit}"))

    bad = [str(x) for x in range(2, 45) if not counting.check_gap_identity(x)]
    checks.append(_all("gap-identity", bad, "integer x in 2..44"))

    bad = []
    for tenth in range(0, 10 * min(limit, 300), 7):
        x = tenth / 10 + 3.05
        if counting.prime_count(x) != counting.prime_count(int(x)):
            bad.append(f"pi({x})")
        if counting.prime_square_count(x) != counting.prime_square_count(int(x)):
            bad.append(f"squares({x})")
    checks.append(_all("floor-semantics", bad, "fractional grid"))

    top = max(limit * limit, 290)
    xs = np.logspace(np.log10(289.0), np.log10(float(top)), 60)
    bad = []
    for x in xs:
        # logspace can round its endpoints a hair below the threshold
        rep = counting.bounds_report(max(float(x), 289.0), "rosser-schoenfeld")
        if not (rep.lower_holds and rep.upper_holds):
            bad.append(f"x={float(x):.1f}")
    checks.append(_all("square-count-bounds", bad, f"60 log points in [289, {top}]"))

    span = min(limit, 5000)
    bad = []
    prev = counting.prime_square_count(24)
    for v in range(25, span + 1):
        cur = counting.prime_square_count(v)
        jump = cur - prev
        r = isqrt(v)
        is_square_of_prime = r * r == v and oracle.is_prime_trial(r) and r >= 5
        if jump != (1 if is_square_of_prime else 0):
            bad.append(f"v={v}")
        prev = cur
    checks.append(_all("square-count-jump-points", bad, f"v <= {span}"))

    grid_xs = [10.0**e for e in range(3, 7)]
    residuals = [counting.mertens_sum(x) for x in grid_xs]
    worst = max(abs(r.residual) * log(r.x) for r in residuals)
    checks.append(("mertens-envelope", worst < 1.0,
                   f"max |residual*ln x| = {worst:.4f} on x in 1e3..1e6"))

    x = float(max(limit * limit, 289))
    (_, r1, r2), = counting.asymptotic_ratios([x])
    checks.append(("asymptotic-ratio-report", True, f"x={x:g}: r1={r1:.4f} r2={r2:.4f}"))

    return checks


def matrix_suite(limit: int = 100) -> list[Check]:
    """Exact rank-1 structure, descent map, run blocks."""
    _check_cap("matrix", limit, MATRIX_CAP)
    checks: list[Check] = []

    side = min(limit, 50)
    block = blocks.submatrix(1, 1, side, side)
    bad = []
    for i in range(side):
        for k in range(i + 1, side):
            ri, rk = block.entries[i], block.entries[k]
            for j in range(side):
                for l in range(j + 1, side):
                    if ri[j] * rk[l] - ri[l] * rk[j] != 0:
                        bad.append(f"rows {i},{k} cols {j},{l}")
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    checks.append(_all("rank-one-2x2-minors", bad, f"exhaustive on {side}x{side}"))

    rng = random.Random(20_240_601)
    bad = []
    for _ in range(10):
        k0 = rng.randint(1, limit)
        n0 = rng.randint(1, limit)
        r = rng.randint(1, 20)
        c = rng.randint(1, 20)
        if blocks.rank(blocks.submatrix(k0, n0, r, c)) != 1:
            bad.append(f"({k0},{n0},{r},{c})")
    checks.append(_all("block-rank-one", bad, "10 random blocks <= 20x20"))

    bad = []
    eligible = 0
    for k in range(1, limit + 1):
        p = grid.row_prime(k)
        for n in range(1, limit + 1):
            defining, _ = grid.classify(k, n)
            if not defining or p * wheel_value(n) <= p * p:
                continue
            eligible += 1
            if not blocks.transition_down(k, n).all_hold:
                bad.append(f"({k},{n})")
    checks.append(_all("transition-down", bad,
                       f"{eligible} eligible entries in {limit}x{limit}"))

    reports = blocks.defining_runs(max(limit, 100))
    complete = [r for r in reports if r.verdict != "incomplete"]
    bad = [f"col {r.start_col}" for r in complete if r.verdict != "ok"]
    checks.append(_all("run-blocks-singular-diagonal", bad,
                       f"{len(complete)} complete runs, limit_col={max(limit, 100)}"))

    bad = []
    for n in range(2, limit + 1):
        w = wheel_value(n)
        col_defining = grid.classify(2, n)[0]
        if col_defining != oracle.is_prime_trial(w):
            bad.append(f"col {n}: classification")
            continue
        if col_defining:
            k_lead = prime_row_index(w)
            hits = [k for k in range(1, k_lead + 3) if grid.classify(k, n)[1]]
            if hits != [k_lead]:
                bad.append(f"col {n}: leading rows {hits}")
    checks.append(_all("defining-column-unique-leading", bad, f"cols 2..{limit}"))

    return checks


_SUITES: dict[str, Callable[[int], list[Check]]] = {
    "core": core_suite,
    "sieve": sieve_suite,
    "counting": counting_suite,
    "matrix": matrix_suite,
}


def run_suite(name: str, limit: int | None = None) -> list[Check]:
    """Run one named suite, or all of them at their default sizes."""
    if name == "all":
        if limit is not None:
            raise ValueError("suite 'all' uses per-suite defaults; "
                             "pick a specific suite to override its limit")
        out = []
        for suite in ("core", "sieve", "counting", "matrix"):
            out.extend((f"{suite}/{label}", ok, detail)
                       for label, ok, detail in run_suite(suite))
        return out
    try:
        fn = _SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(_SUITES)}") from None
    if limit is None:
        limit = DEFAULT_LIMITS[name]
    return fn(limit)


def _count_leq(sorted_values: list[int], x: int) -> int:
    return bisect_right(sorted_values, x)


def _wheel_values_upto(x: int) -> list[int]:
    out = []
    v, step = 5, 2
    while v <= x:
        out.append(v)
        v += step
        step = 6 - step
    return out


def _take(it, n: int) -> list[int]:
    out = []
    for value in it:
        out.append(value)
        if len(out) == n:
            break
    return out


def _cumulative(pattern: tuple[int, int], n: int) -> list[int]:
    out = [0]
    i = 0
    while len(out) < n:
        out.append(out[-1] + pattern[i % 2])
        i += 1
    return out
