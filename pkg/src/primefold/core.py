"""Arithmetic building blocks of the folded prime enumerator.

Three {0,1}-valued expressions built from additions, floor divisions, sums
and gcd, evaluated exactly as written (no boolean shortcuts for the floors):

    hit(k, j)  = floor(gcd(k, j) / k)                      divisor test
    delta(j,k) = floor(j / k) - floor((j - 1) / k)         gcd-free divisor test
    I(j)       = floor(1 / (1 + sum_{k=2}^{j-1} hit))      prime indicator
    S(i)       = sum_{j=2}^{i} I(j)                        prefix count = pi(i)
    A(s, x)    = floor(1 / (1 + floor(s / (x + 1))))       step, 1 iff s <= x

Both divisor tests equal 1 exactly when k divides j, so the indicator's
inner sum counts proper divisors and I(j) = 1 iff j is prime.

Two execution paths compute identical values:

* the default path memoizes I(j) per (j, variant) and runs the k-scan as a
  vectorized integer expression (same gcd/floor per element);
* when an `OpCounts` tally is passed via `counter`, a plain uncached loop
  runs instead and every gcd call and floor division is tallied at its
  site.  Counted runs never short-circuit; the k-loop always reaches j-1.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from math import gcd
from typing import TYPE_CHECKING

import numpy as np

from .nat import DomainError, as_nat, checked_add

if TYPE_CHECKING:  # pragma: no cover
    from .audit import OpCounts

# numpy scans use int64; anything larger falls back to the scalar loop
_VECTOR_MAX = 2**63 - 1
_CHUNK = 1 << 20


class IndicatorVariant(enum.Enum):
    """Which divisor test drives the prime indicator."""

    GCD = "gcd"
    DELTA = "delta"


def divisor_hit(k: int, j: int) -> int:
    """floor(gcd(k, j) / k) for 2 <= k <= j-1; equals 1 iff k divides j."""
    k = as_nat(k, "k")
    j = as_nat(j, "j")
    if not 2 <= k <= j - 1:
        raise DomainError(f"divisor_hit requires 2 <= k <= j-1, got k={k}, j={j}")
    return gcd(k, j) // k


def delta(j: int, k: int) -> int:
    """floor(j/k) - floor((j-1)/k) for j >= 2, 2 <= k <= j-1; 1 iff k | j."""
    j = as_nat(j, "j")
    k = as_nat(k, "k")
    if j < 2 or not 2 <= k <= j - 1:
        raise DomainError(f"delta requires j >= 2 and 2 <= k <= j-1, got j={j}, k={k}")
    return j // k - (j - 1) // k


def _scan_hits_vectorized(j: int, variant: IndicatorVariant) -> int:
    total = 0
    for lo in range(2, j, _CHUNK):
        ks = np.arange(lo, min(j, lo + _CHUNK), dtype=np.int64)
        if variant is IndicatorVariant.GCD:
            hits = np.gcd(ks, j) // ks
        else:
            hits = j // ks - (j - 1) // ks
        total += int(hits.sum())
    return total


def _scan_hits_loop(j: int, variant: IndicatorVariant) -> int:
    if variant is IndicatorVariant.GCD:
        return sum(gcd(k, j) // k for k in range(2, j))
    return sum(j // k - (j - 1) // k for k in range(2, j))


def _scan_hits_counted(j: int, variant: IndicatorVariant, counter: "OpCounts") -> int:
    # accumulator updates here belong to the divisor-test tally, not the
    # additions tally (see audit.OpCounts)
    total = 0
    calls = 0
    if variant is IndicatorVariant.GCD:
        for k in range(2, j):
            total += gcd(k, j) // k
            calls += 1
        counter.gcd_calls += calls
        counter.inner_test_floors += calls
    else:
        jm1 = j - 1
        for k in range(2, j):
            total += j // k - jm1 // k
            calls += 1
        counter.delta_calls += calls
        counter.inner_test_floors += 2 * calls
    return total


@lru_cache(maxsize=None)
def _indicator_value(j: int, variant: IndicatorVariant) -> int:
    if j > _VECTOR_MAX:  # pragma: no cover - not computable at this scale anyway
        hits = _scan_hits_loop(j, variant)
    else:
        hits = _scan_hits_vectorized(j, variant)
    return 1 // (1 + hits)


def _indicator_early_exit(j: int, variant: IndicatorVariant) -> int:
    # stop scanning at the first divisor; value unchanged, never audited
    for k in range(2, j):
        if variant is IndicatorVariant.GCD:
            hit = gcd(k, j) // k
        else:
            hit = j // k - (j - 1) // k
        if hit:
            return 0
    return 1


def indicator(
    j: int,
    variant: IndicatorVariant = IndicatorVariant.GCD,
    *,
    counter: "OpCounts | None" = None,
    early_exit: bool = False,
) -> int:
    """Prime indicator floor(1 / (1 + sum of divisor hits)); 1 iff j prime.

    `counter` routes the evaluation through the uncached scalar loop and
    tallies every operation; `early_exit` breaks at the first divisor hit
    and is rejected in counted runs.
    """
    j = as_nat(j, "j")
    if j < 2:
        raise DomainError(f"indicator requires j >= 2, got {j}")
    if counter is not None:
        if early_exit:
            raise DomainError("early_exit is excluded from counted runs")
        hits = _scan_hits_counted(j, variant, counter)
        value = 1 // (1 + hits)
        counter.indicator_floors += 1
        counter.additions += 1
        return value
    if early_exit:
        return _indicator_early_exit(j, variant)
    return _indicator_value(j, variant)


def prefix_count(i: int, variant: IndicatorVariant = IndicatorVariant.GCD) -> int:
    """S(i) = sum_{j=2}^{i} I(j) for i >= 1; equals pi(i).  Empty sum at i=1."""
    i = as_nat(i, "i")
    if i < 1:
        raise DomainError(f"prefix_count requires i >= 1, got {i}")
    return sum(_indicator_value(j, variant) for j in range(2, i + 1))


def step(s: int, x: int, *, counter: "OpCounts | None" = None) -> int:
    """Folded step floor(1 / (1 + floor(s / (x+1)))); equals 1 iff s <= x."""
    s = as_nat(s, "s")
    x = as_nat(x, "x")
    q = s // checked_add(x, 1)
    a = 1 // checked_add(1, q)
    if counter is not None:
        counter.step_floors += 2
        counter.additions += 2
    return a
