"""End-to-end acceptance checks at their stated tolerances and budgets.

Each criterion prints one ``ACCEPTANCE <id>: PASS/FAIL`` line (visible
with ``pytest tests/test_acceptance.py -v -s``) and then asserts.
"""

import random
import time
from bisect import bisect_right
from itertools import islice
from math import log
from pathlib import Path

import numpy as np

import hexsieve as hs
from hexsieve.oracle import is_prime_trial

DATA = Path(__file__).parent / "data"


def report(name, ok, detail=""):
    line = f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
    print(line)
    assert ok, line


def test_criterion_1_golden_output(run_cli):
    fixture = "".join((DATA / "primes_upto_5000.txt").read_text().split())
    run_cli("primes", "--limit", "5000")  # warm caches before timing
    t0 = time.perf_counter()
    code, out, _ = run_cli("primes", "--limit", "5000")
    elapsed = time.perf_counter() - t0
    got = "".join(out.split())
    values = got.split(",")
    ok = (code == 0 and got == fixture and len(values) == 669
          and values[-1] == "4999" and elapsed < 0.1)
    report("1-golden-output", ok,
           f"{len(values)} primes, last {values[-1]}, {elapsed * 1000:.1f} ms")


def test_criterion_2_sieve_oracle_equivalence():
    t0 = time.perf_counter()
    failures = []
    ref = [v for v in range(2, 10_001) if is_prime_trial(v)]
    for n in range(5, 10_001):
        if hs.run_sieve(n)[0] != ref[:bisect_right(ref, n)]:
            failures.append(f"n={n}")
            break
    for n in (10**5, 10**6):
        if hs.run_sieve(n)[0] != [v for v in range(2, n + 1) if is_prime_trial(v)]:
            failures.append(f"spot n={n}")
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    report("2-sieve-oracle-equivalence", ok,
           f"exhaustive 5..1e4 plus spots 1e5, 1e6 in {elapsed:.1f} s"
           + (f"; {failures}" if failures else ""))


def test_criterion_3_space_formula():
    wheel = []
    v, step = 5, 2
    while v <= 100_000:
        wheel.append(v)
        v += step
        step = 6 - step
    bad = None
    for n in range(5, 100_001):
        c = hs.space_bound(n)
        if c != 1 + bisect_right(wheel, n) or not c < n:
            bad = n
            break
    report("3-space-formula", bad is None,
           "exact slot count and C(n) < n for 5 <= n <= 1e5"
           + (f"; first failure n={bad}" if bad else ""))


def test_criterion_4_offset_closed_forms():
    def cumulative(first_step):
        out, total, step = [0], 0, first_step
        while len(out) < 1000:
            total += step
            out.append(total)
            step = 6 - step
        return out

    bad = [p for p, first in ((5, 2), (11, 2), (7, 4), (13, 4))
           if list(islice(hs.cross_offsets(p), 1000)) != cumulative(first)]
    report("4-offset-closed-forms", not bad,
           "first 1000 terms equal the 2,4-alternating cumulative sums, both classes")


def test_criterion_5_counting_identities():
    t0 = time.perf_counter()
    bad = next((x for x in range(3, 2001) if not hs.check_pi_identity(x)), None)
    bad_gap = next((x for x in range(2, 45) if not hs.check_gap_identity(x)), None)
    elapsed = time.perf_counter() - t0
    ok = bad is None and bad_gap is None and elapsed < 30
    report("5-counting-identities", ok,
           f"square link on [3,2000], gap link on [2,44] in {elapsed:.1f} s")


def test_criterion_6_square_count_bounds():
    bad = None
    for x in np.logspace(np.log10(289.0), 7.0, 200):
        rep = hs.bounds_report(max(float(x), 289.0))
        if not (rep.lower_holds and rep.upper_holds):
            bad = float(x)
            break
    report("6-square-count-bounds", bad is None,
           "strict bounds at 200 log-spaced x in [289, 1e7]"
           + (f"; first failure x={bad:.1f}" if bad else ""))


def test_criterion_7_matrix_structure():
    t0 = time.perf_counter()
    problems = []

    e = hs.submatrix(1, 1, 50, 50).entries
    minors_ok = all(
        e[i][j] * e[k][l] == e[i][l] * e[k][j]
        for i in range(50) for k in range(i + 1, 50)
        for j in range(50) for l in range(j + 1, 50))
    if not minors_ok:
        problems.append("2x2 minors")

    rng = random.Random(1729)
    for _ in range(10):
        shape = (rng.randint(1, 200), rng.randint(1, 200),
                 rng.randint(1, 20), rng.randint(1, 20))
        if hs.rank(hs.submatrix(*shape)) != 1:
            problems.append(f"rank at {shape}")

    runs = hs.defining_runs(10_000)
    complete = [r for r in runs if r.verdict != "incomplete"]
    if not complete or any(r.verdict != "ok" for r in complete):
        problems.append("run blocks")

    descents = 0
    for k in range(1, 101):
        p = hs.row_prime(k)
        for n in range(1, 101):
            eligible = hs.classify(k, n)[0] and p * hs.wheel_value(n) > p * p
            if eligible:
                descents += 1
                if not hs.transition_down(k, n).all_hold:
                    problems.append(f"descent ({k},{n})")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 60
    report("7-matrix-structure", ok,
           f"50x50 minors, 10 ranks, {len(complete)} run blocks, "
           f"{descents} descents in {elapsed:.1f} s"
           + (f"; issues {problems[:3]}" if problems else ""))


def test_criterion_8_mertens_and_asymptotics():
    res = hs.mertens_sum(10**6)
    mertens_ok = abs(res.residual) < 0.01
    try:
        (x, r1, r2), = hs.asymptotic_ratios([10**8])
        lo, hi = 0.8, 1.2
    except MemoryError:
        (x, r1, r2), = hs.asymptotic_ratios([10**7])
        lo, hi = 0.7, 1.3
    ratios_ok = lo < r1 < hi and lo < r2 < hi
    report("8-mertens-and-asymptotics", mertens_ok and ratios_ok,
           f"|residual| = {abs(res.residual):.2e} at 1e6; "
           f"x={x:g}: r1={r1:.3f}, r2={r2:.3f} within ({lo}, {hi})")


def test_criterion_9_complexity_trend():
    ratios = []
    for n in (10**5, 10**6, 10**7):
        state = hs.sieve_state(n)
        crossings = sum(s.crossed for s in state.stats)
        ratios.append(crossings / (n * log(log(n))))
    spread = max(ratios) / min(ratios)
    report("9-complexity-trend", spread < 2,
           "crossings/(n ln ln n) = "
           + ", ".join(f"{r:.4f}" for r in ratios)
           + f"; spread {spread:.2f} < 2")
