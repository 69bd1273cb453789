"""Timing harness: the wheel sieve against a plain odd-number baseline.

Crossing-event counts come from the per-stage counters, so the reported
ratio against n * ln(ln n) is exact while the wall-clock columns vary
run to run.
"""

import csv
import time
from dataclasses import dataclass
from math import log
from typing import Iterable, Optional, TextIO

import numpy as np

from . import sieve


@dataclass(frozen=True)
class BenchRow:
    n: int
    crossings: int
    wall_ms: float
    wall_ms_baseline: Optional[float]
    ratio_nlnlnn: float


def classic_odd_sieve(n: int) -> list[int]:
    """Textbook Eratosthenes over the odd numbers, the comparison baseline."""
    if n < 2:
        return []
    if n < 3:
        return [2]
    size = (n - 1) // 2  # slot i holds 2*i + 3
    marks = np.zeros(size, dtype=bool)
    p = 3
    while p * p <= n:
        if not marks[(p - 3) // 2]:
            marks[(p * p - 3) // 2::p] = True
        p += 2
    odds = 2 * np.flatnonzero(~marks) + 3
    return [2] + odds.tolist()


def run(limits: Iterable[int], baseline: str = "classic") -> list[BenchRow]:
    """Time the sieve at each limit; limits must be ascending."""
    limits = list(limits)
    if limits != sorted(limits):
        raise ValueError("bench limits must be ascending")
    if baseline not in ("classic", "none"):
        raise ValueError(f"unknown baseline {baseline!r}")
    rows = []
    for n in limits:
        t0 = time.perf_counter()
        _, state = sieve.run_sieve(n)
        wall_ms = (time.perf_counter() - t0) * 1000.0
        crossings = sum(s.crossed for s in state.stats)
        base_ms = None
        if baseline == "classic":
            t0 = time.perf_counter()
            classic_odd_sieve(n)
            base_ms = (time.perf_counter() - t0) * 1000.0
        rows.append(BenchRow(n, crossings, wall_ms, base_ms,
                             crossings / (n * log(log(n)))))
    return rows


def write_csv(rows: Iterable[BenchRow], fh: TextIO) -> None:
    """CSV export ``n,crossings,wall_ms,wall_ms_baseline,ratio_nlnlnn``."""
    w = csv.writer(fh)
    w.writerow(["n", "crossings", "wall_ms", "wall_ms_baseline", "ratio_nlnlnn"])
    for r in rows:
        w.writerow([
            r.n,
            r.crossings,
            f"{r.wall_ms:.3f}",
            "" if r.wall_ms_baseline is None else f"{r.wall_ms_baseline:.3f}",
            f"{r.ratio_nlnlnn:.6f}",
        ])
