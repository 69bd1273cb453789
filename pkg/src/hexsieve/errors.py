"""Exception types shared across the package.

Value overflow of 64-bit grid entries is reported with the builtin
OverflowError; everything else derives from HexsieveError.
"""


class HexsieveError(Exception):
    """Base class for package-specific errors."""


class InvalidWheelValue(HexsieveError, ValueError):
    """Value is not a wheel number (needs v >= 5 and v = 6h +/- 1)."""


class InvalidLimit(HexsieveError, ValueError):
    """Sieve limit below 5, the smallest wheel number."""


class InvalidPrime(HexsieveError, ValueError):
    """Expected a prime >= 5 (hence congruent to +/-1 mod 6)."""


class LimitExceeded(HexsieveError, RuntimeError):
    """Prime generation would exceed the configured cache bound."""


class TraceUnavailable(HexsieveError, RuntimeError):
    """The sieve state was produced without trace recording."""


class NotSquare(HexsieveError, ValueError):
    """Determinant requested for a non-square block."""


class PreconditionFailed(HexsieveError, ValueError):
    """The grid entry does not satisfy the operation's preconditions."""


class DomainError(HexsieveError, ValueError):
    """Argument outside the validity domain of a counting identity or bound."""


class CapExceeded(HexsieveError, ValueError):
    """Oracle input above the brute-force verification cap."""
