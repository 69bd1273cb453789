"""The mod-6 wheel: the ascending sequence 5, 7, 11, 13, 17, 19, 23, 25, ...

Every integer >= 5 that is coprime to 6 appears exactly once.  Odd
positions hold the 6h-1 values and even positions the 6h+1 values, so
position and value convert in O(1) both ways.
"""

from .errors import InvalidWheelValue


def wheel_value(n: int) -> int:
    """Wheel value at 1-based position n."""
    if n < 1:
        raise ValueError(f"wheel position must be >= 1, got {n}")
    return 3 * n + 2 if n % 2 else 3 * n + 1


def wheel_index(v: int) -> int:
    """Position of v on the wheel; exact inverse of wheel_value.

    6h-1 sits at position 2h-1 and 6h+1 at position 2h; both cases
    collapse to v // 3.
    """
    if not is_wheel_value(v):
        raise InvalidWheelValue(f"{v} is not a wheel value (need v >= 5 and v = 6h +/- 1)")
    return v // 3


def is_wheel_value(v: int) -> bool:
    """True when v lies on the wheel (v >= 5 and v = 6h +/- 1)."""
    return v >= 5 and v % 6 in (1, 5)


def count_upto(x: int) -> int:
    """Number of wheel values <= x (0 when x < 5).

    Counts the 6h-1 and 6h+1 families separately: h runs to (x+1)//6
    and (x-1)//6 respectively.
    """
    if x < 5:
        return 0
    return (x + 1) // 6 + (x - 1) // 6
