"""Mod-6 wheel prime sieve and the product grid of 6h±1 composites.

The package provides closed-form access to the grid (rows are primes
>= 5, columns the wheel values 5, 7, 11, 13, ...), the wheel sieve built
on it, prime and prime-square counting with their exact identities, and
exact-arithmetic verification of the grid's rank-1 block structure.
"""

from .blocks import (Block, RunReport, TransitionResult, defining_runs, det,
                     rank, submatrix, transition_down)
from .counting import (MERTENS_CONSTANT, BoundsReport, MertensResult,
                       asymptotic_ratios, bounds_report, calibrate_square_bounds,
                       check_gap_identity, check_pi_identity,
                       leading_element_bounds, mertens_sum, prime_count,
                       prime_square_count)
from .errors import (CapExceeded, DomainError, HexsieveError, InvalidLimit,
                     InvalidPrime, InvalidWheelValue, LimitExceeded, NotSquare,
                     PreconditionFailed, TraceUnavailable)
from .grid import Entry, Occurrence, classify, element, leading_col, occurrences, row_prime
from .primes import is_prime, nth_prime, prime_row_index, primes_upto
from .sieve import (CrossingTrace, SieveState, StageStats, cross_offsets,
                    crossed_composites, run_sieve, sieve_state, space_bound,
                    stage_stats)
from .wheel import count_upto, is_wheel_value, wheel_index, wheel_value

__version__ = "0.1.0"

__all__ = [
    "Block", "BoundsReport", "CapExceeded", "CrossingTrace", "DomainError",
    "Entry", "HexsieveError", "InvalidLimit", "InvalidPrime",
    "InvalidWheelValue", "LimitExceeded", "MERTENS_CONSTANT", "MertensResult",
    "NotSquare", "Occurrence", "PreconditionFailed", "RunReport", "SieveState",
    "StageStats", "TraceUnavailable", "TransitionResult", "asymptotic_ratios",
    "bounds_report", "calibrate_square_bounds", "check_gap_identity",
    "check_pi_identity", "classify", "count_upto", "cross_offsets",
    "crossed_composites", "defining_runs", "det", "element", "is_prime",
    "is_wheel_value", "leading_col", "leading_element_bounds", "mertens_sum",
    "nth_prime", "occurrences", "prime_count", "prime_row_index",
    "prime_square_count", "primes_upto", "rank", "row_prime", "run_sieve",
    "sieve_state", "space_bound", "stage_stats", "submatrix",
    "transition_down", "wheel_index", "wheel_value",
]
