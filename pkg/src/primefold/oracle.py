"""Independent ground truth: a classical sieve of Eratosthenes.

Provides primality flags, the prime counting function pi(m) and the n-th
prime p_n.  Shares no code with the gcd/floor indicator in `core`; the two
are cross-validated against each other in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .nat import DomainError, RangeError, as_nat

SIEVE_LIMIT_MAX = 10**8


@dataclass(frozen=True, eq=False)
class SieveTable:
    """Immutable sieve over [0, limit]; shareable across threads."""

    limit: int
    flags: np.ndarray = field(repr=False)
    prime_list: np.ndarray = field(repr=False)
    pi_prefix: np.ndarray = field(repr=False)

    @property
    def prime_count(self) -> int:
        return int(self.prime_list.size)

    def is_prime(self, m: int) -> bool:
        m = as_nat(m, "m")
        if m > self.limit:
            raise RangeError(f"m={m} exceeds sieve limit {self.limit}")
        return bool(self.flags[m])

    def pi(self, m: int) -> int:
        """Number of primes <= m."""
        m = as_nat(m, "m")
        if m > self.limit:
            raise RangeError(f"m={m} exceeds sieve limit {self.limit}")
        return int(self.pi_prefix[m])

    def nth_prime(self, n: int) -> int:
        """The n-th prime, 1-indexed (p_1 = 2)."""
        n = as_nat(n, "n")
        if not 1 <= n <= self.prime_count:
            raise RangeError(
                f"n={n} outside [1, {self.prime_count}]; rebuild with a larger limit"
            )
        return int(self.prime_list[n - 1])


def build_sieve(limit: int) -> SieveTable:
    """Standard sieve of Eratosthenes up to `limit` inclusive."""
    limit = as_nat(limit, "limit")
    if limit < 2:
        raise DomainError(f"build_sieve requires limit >= 2, got {limit}")
    if limit > SIEVE_LIMIT_MAX:
        raise RangeError(f"limit {limit} exceeds the {SIEVE_LIMIT_MAX} memory budget")
    flags = np.zeros(limit + 1, dtype=bool)
    flags[2:] = True
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    prime_list = np.flatnonzero(flags).astype(np.int64)
    pi_prefix = np.cumsum(flags, dtype=np.int64)
    return SieveTable(limit=limit, flags=flags, prime_list=prime_list, pi_prefix=pi_prefix)


def sieve_for_nth(n: int) -> SieveTable:
    """A sieve guaranteed to contain p_n, sized from the n(ln n + ln ln n) bound."""
    n = as_nat(n, "n")
    if n < 1:
        raise DomainError(f"sieve_for_nth requires n >= 1, got {n}")
    if n < 6:
        limit = 100
    else:
        limit = max(100, math.ceil(n * (math.log(n) + math.log(math.log(n)))) + 16)
    return build_sieve(limit)
