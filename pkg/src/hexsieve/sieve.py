"""Wheel sieve over the 6h+/-1 residues.

The mark array keeps one slot per wheel position plus a reserved null
slot 0, so its length is exactly ``space_bound(limit)``.  Each stage
takes the smallest surviving wheel value p with p*p <= limit and crosses
out p's multiples by other wheel values, starting at p*p (everything
smaller was handled by earlier stages).  Those multiples split into two
arithmetic progressions of stride 6p in value, i.e. stride 2p in slot
index, so a stage is two strided writes; the slot of a crossing value v
is the closed form v // 3, never a search.

Primes 2 and 3 are not wheel values and are prepended to the output.
"""

import csv
from dataclasses import dataclass
from typing import Iterator, Optional, TextIO

import numpy as np

from .errors import InvalidLimit, InvalidPrime, TraceUnavailable
from .wheel import wheel_value


def space_bound(n: int) -> int:
    """Exact slot count for limit n, including the reserved null slot.

    Always matches 1 + (number of wheel values <= n), and is strictly
    below n for every n >= 5.
    """
    if n < 5:
        raise InvalidLimit(f"sieve limit must be >= 5, got {n}")
    r = n % 6
    return (n + 2) // 3 - r // 4 + r // 5


def cross_offsets(p: int) -> Iterator[int]:
    """Ascending multiplier offsets for the crossing row of prime p.

    The values crossed out for p are exactly p*p + o*p over these
    offsets; the first offset is always 0.  For p = 6t-1 the offsets are
    0, 2, 6, 8, 12, ... (wheel value minus 5); for p = 6t+1 they are
    0, 4, 6, 10, 12, ... The sequence is unbounded; the caller truncates.
    """
    if p < 5 or p % 6 not in (1, 5):
        raise InvalidPrime(f"need a prime >= 5 of the form 6t +/- 1, got {p}")
    low = p % 6 == 5

    def _offsets() -> Iterator[int]:
        j = 1
        while True:
            w = wheel_value(j)
            yield w - 5 if low else w + (-1) ** j - 4
            j += 1

    return _offsets()


@dataclass(frozen=True)
class StageStats:
    """Crossing counters for one stage of the sieve.

    ``appearances`` counts all grid-row entries <= limit for this prime
    (from the start of the row), ``skipped`` the entries below the
    prime's square (already crossed by earlier stages, always
    wheel_index(prime) - 1), and ``crossed`` the crossing events the
    stage actually performs, so crossed = appearances - skipped.
    Re-crossings of already-marked slots are included in ``crossed``;
    combined with the state's slot count this is enough to reproduce
    both the per-event O(1) cost model used here and a binary-search
    cost model (crossed * log2(slots)).
    """

    stage: int
    prime: int
    crossed: int
    appearances: int
    skipped: int


@dataclass(frozen=True)
class CrossingTrace:
    """One crossed-out composite: where it was first hit and how often it recurs.

    ``multiplicity`` is the number of grid rows containing the value,
    which equals its count of distinct prime factors (all of them are
    >= 5 for a wheel composite).  Multiplicity 1 marks the values that
    appear exactly once in the whole grid.
    """

    value: int
    first_stage: int
    multiplicity: int


@dataclass
class SieveState:
    """Completed sieve run: immutable once returned, safe to share."""

    limit: int
    marks: np.ndarray  # bool per slot, slot 0 reserved; True = crossed out
    stats: list[StageStats]
    stage_of: Optional[np.ndarray] = None  # int32 first-crossing stage, 0 = uncrossed


def sieve_state(n: int, trace: bool = False) -> SieveState:
    """Run the sieve to limit n and return the raw state.

    With ``trace`` the first-crossing stage of every slot is recorded in
    a parallel int32 array (skipped by default: benchmark runs want the
    single bit array).
    """
    if n < 5:
        raise InvalidLimit(f"sieve limit must be >= 5, got {n}")
    size = space_bound(n)
    marks = np.zeros(size, dtype=bool)
    stage_of = np.zeros(size, dtype=np.int32) if trace else None
    stats: list[StageStats] = []

    stage = 0
    i = 1
    while i < size:
        if marks[i]:
            i += 1
            continue
        p = 3 * i + 2 if i % 2 else 3 * i + 1
        if p * p > n:
            break
        stage += 1
        # Second progression starts at p*(p+2) or p*(p+4) depending on
        # the residue of p; both progressions stride 2p slots.
        w2 = p + 2 if p % 6 == 5 else p + 4
        crossed = 0
        for v0 in (p * p, p * w2):
            if v0 > n:
                continue
            start = v0 // 3
            marks[start::2 * p] = True
            crossed += len(range(start, size, 2 * p))
            if stage_of is not None:
                sub = stage_of[start::2 * p]
                sub[sub == 0] = stage
        skipped = i - 1
        stats.append(StageStats(stage, p, crossed, crossed + skipped, skipped))
        i += 1

    return SieveState(limit=n, marks=marks, stats=stats, stage_of=stage_of)


def primes_from(state: SieveState) -> list[int]:
    """2, 3, then every uncrossed wheel value, ascending."""
    idx = np.flatnonzero(~state.marks[1:]) + 1
    values = 3 * idx + 1 + (idx & 1)
    return [2, 3] + values.tolist()


def run_sieve(n: int, trace: bool = False) -> tuple[list[int], SieveState]:
    """Find all primes <= n (n >= 5); returns (primes, state)."""
    state = sieve_state(n, trace=trace)
    return primes_from(state), state


def stage_stats(state: SieveState) -> list[StageStats]:
    """Per-stage counters of a completed run, one entry per executed stage."""
    return list(state.stats)


def crossed_composites(state: SieveState) -> list[CrossingTrace]:
    """Trace records for every crossed value, ascending.

    The crossed values are exactly the composite wheel numbers <= limit.
    Requires a state produced with trace=True.
    """
    if state.stage_of is None:
        raise TraceUnavailable("sieve was run without trace=True")
    out = []
    for i in np.flatnonzero(state.marks):
        v = wheel_value(int(i))
        out.append(CrossingTrace(v, int(state.stage_of[i]), _distinct_prime_factors(v)))
    return out


def _distinct_prime_factors(v: int) -> int:
    # v is a wheel number, so every prime factor is >= 5.
    count = 0
    rem = v
    d, step = 5, 2
    while d * d <= rem:
        if rem % d == 0:
            count += 1
            while rem % d == 0:
                rem //= d
        d += step
        step = 6 - step
    return count + (rem > 1)


def write_trace_csv(state: SieveState, fh: TextIO) -> None:
    """CSV export ``value,first_stage,multiplicity``, ascending by value."""
    w = csv.writer(fh)
    w.writerow(["value", "first_stage", "multiplicity"])
    for t in crossed_composites(state):
        w.writerow([t.value, t.first_stage, t.multiplicity])


def format_primes(primes: list[int], sep: str = ", ") -> str:
    """Render a prime list as decimal text; the default separator matches
    the human-readable list output, sep="," gives the CSV form."""
    return sep.join(map(str, primes))
