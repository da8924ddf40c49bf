"""Checked nonnegative 64-bit integers.

Every quantity in this package (indices, counts, primes, summation limits)
lives in [0, 2^64 - 1].  Validation happens at operation boundaries: inputs
are checked once, and any product/shift/sum that could leave the range goes
through a checked helper that raises OverflowError instead of wrapping.
Loop accumulators whose value is bounded a priori by an already-validated
input (e.g. a sum of {0,1} terms over at most U iterations) are not
re-checked per iteration.
"""

from __future__ import annotations

NAT_MAX = 2**64 - 1


class DomainError(ValueError):
    """An argument violates an operation's precondition."""


class RangeError(ValueError):
    """A request exceeds a representability or resource limit."""


def as_nat(value: int, name: str = "value") -> int:
    """Validate that `value` is an integer in [0, NAT_MAX] and return it."""
    if not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 0:
        raise DomainError(f"{name} must be nonnegative, got {value}")
    if value > NAT_MAX:
        raise OverflowError(f"{name} = {value} exceeds the 64-bit natural range")
    return value


def checked_add(a: int, b: int) -> int:
    total = a + b
    if total > NAT_MAX:
        raise OverflowError(f"{a} + {b} exceeds the 64-bit natural range")
    return total


def checked_mul(a: int, b: int) -> int:
    product = a * b
    if product > NAT_MAX:
        raise OverflowError(f"{a} * {b} exceeds the 64-bit natural range")
    return product
