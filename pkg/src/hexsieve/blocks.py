"""Exact integer blocks of the product grid and their structure checks.

Everything here computes over Python ints (arbitrary precision), never
floats: the point of the module is that singularity and rank statements
about grid blocks hold exactly.  Any block of the grid is an outer
product of its row primes and column wheel values, so every square
block of size >= 2 is singular and every nonempty block has rank 1.
"""

import csv
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, TextIO

from .errors import NotSquare, PreconditionFailed
from .grid import classify, leading_col, row_prime
from .primes import is_prime, prime_row_index
from .wheel import wheel_value


@dataclass(frozen=True)
class Block:
    """Finite grid block: entries[i][j] = row_prime(row_origin + i) *
    wheel_value(col_origin + j)."""

    row_origin: int
    col_origin: int
    entries: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])


def submatrix(k0: int, n0: int, r: int, c: int) -> Block:
    """The r x c block with top-left grid position (k0, n0)."""
    if min(k0, n0, r, c) < 1:
        raise ValueError("block origin and shape must all be >= 1")
    primes = [row_prime(k0 + i) for i in range(r)]
    wheels = [wheel_value(n0 + j) for j in range(c)]
    entries = tuple(tuple(p * w for w in wheels) for p in primes)
    return Block(k0, n0, entries)


def det(block: Block) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if block.rows != block.cols:
        raise NotSquare(f"determinant needs a square block, got {block.rows}x{block.cols}")
    n = block.rows
    m = [list(row) for row in block.entries]
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


def rank(block: Block) -> int:
    """Rank over the rationals by exact integer row elimination."""
    m = [list(row) for row in block.entries]
    rows, cols = block.rows, block.cols
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, rows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r]
        for i in range(r + 1, rows):
            f = m[i][col]
            if f:
                g = gcd(lead[col], f)
                a, b = lead[col] // g, f // g
                m[i] = [a * x - b * y for x, y in zip(m[i], lead)]
        r += 1
        if r == rows:
            break
    return r


@dataclass(frozen=True)
class TransitionResult:
    """Outcome of mapping a defining entry down to its cofactor's row.

    checks, in order: the target row lies below the source row; the value
    sits before the target row's square; the value reappears in the
    target row at the source row's square column; and the target row's
    entry in the source column is the target square.
    """

    source: tuple[int, int]
    target_row: int
    checks: tuple[bool, bool, bool, bool]

    @property
    def all_hold(self) -> bool:
        return all(self.checks)


def transition_down(k: int, n: int) -> TransitionResult:
    """Descend from a defining entry past its row's square to the row
    whose prime is the entry's wheel cofactor."""
    p = row_prime(k)
    w = wheel_value(n)
    value = p * w
    defining, _ = classify(k, n)
    if not defining:
        raise PreconditionFailed(f"entry ({k},{n}) = {value} is not defining")
    if value <= p * p:
        raise PreconditionFailed(
            f"entry ({k},{n}) = {value} is not past the row square {p * p}")
    j = prime_row_index(w)
    q = row_prime(j)
    checks = (
        k < j,
        value < q * q,
        q * wheel_value(leading_col(k)) == value,
        q * wheel_value(n) == q * q,
    )
    return TransitionResult((k, n), j, checks)


@dataclass(frozen=True)
class RunReport:
    """One maximal run of consecutive defining columns (length >= 2).

    Complete runs carry the determinant and diagonal verdicts of the
    square block aligned on the run (rows chosen so the consecutive row
    squares fall on the main diagonal).  Runs cut off by the scan
    boundary are ``incomplete`` and carry no verdict data.
    """

    start_col: int
    length: int
    verdict: str  # "ok", "failed", or "incomplete"
    det_zero: Optional[bool]
    diag_ok: Optional[bool]


def defining_runs(limit_col: int) -> list[RunReport]:
    """Scan columns 1..limit_col for runs of defining columns.

    A column below row 1 consists of defining entries exactly when its
    wheel value is prime; column 1 (wheel value 5) never qualifies, so
    every run found is bounded on the left.  For each complete maximal
    run of length m > 1 the m x m block whose diagonal holds the
    consecutive row squares is extracted and checked: determinant
    exactly 0, diagonal equal to those squares.
    """
    if limit_col < 2:
        raise ValueError(f"limit_col must be >= 2, got {limit_col}")
    reports = []
    col = 2
    while col <= limit_col:
        if not is_prime(wheel_value(col)):
            col += 1
            continue
        start = col
        while col <= limit_col and is_prime(wheel_value(col)):
            col += 1
        length = col - start
        if length < 2:
            continue
        if col > limit_col:
            # The run touches the boundary and may extend past it.
            reports.append(RunReport(start, length, "incomplete", None, None))
            continue
        k0 = prime_row_index(wheel_value(start))
        block = submatrix(k0, start, length, length)
        det_zero = det(block) == 0
        diag_ok = all(
            block.entries[i][i] == row_prime(k0 + i) ** 2 for i in range(length))
        verdict = "ok" if det_zero and diag_ok else "failed"
        reports.append(RunReport(start, length, verdict, det_zero, diag_ok))
    return reports


def write_runs_csv(reports: Iterable[RunReport], fh: TextIO) -> None:
    """CSV export ``start_col,m,det_zero,diag_ok`` (empty cells for
    incomplete runs)."""
    w = csv.writer(fh)
    w.writerow(["start_col", "m", "det_zero", "diag_ok"])
    for r in reports:
        w.writerow([
            r.start_col,
            r.length,
            "" if r.det_zero is None else str(r.det_zero).lower(),
            "" if r.diag_ok is None else str(r.diag_ok).lower(),
        ])
