"""Building-block tests: divisor tests, indicator, prefix count, step.

The in-file oracle is plain trial division, independent of both the
gcd/floor indicator and the sieve module.
"""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primefold import (
    NAT_MAX,
    DomainError,
    IndicatorVariant,
    OpCounts,
    delta,
    divisor_hit,
    indicator,
    prefix_count,
    step,
)
from primefold.nat import as_nat, checked_add, checked_mul

GCD = IndicatorVariant.GCD
DELTA = IndicatorVariant.DELTA


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


# ---------------------------------------------------------------- nat checks


def test_as_nat_accepts_range_and_rejects_rest():
    assert as_nat(0) == 0
    assert as_nat(NAT_MAX) == NAT_MAX
    with pytest.raises(DomainError):
        as_nat(-1)
    with pytest.raises(DomainError):
        as_nat(2.5)
    with pytest.raises(OverflowError):
        as_nat(NAT_MAX + 1)


def test_checked_ops_raise_instead_of_wrapping():
    assert checked_add(NAT_MAX - 1, 1) == NAT_MAX
    assert checked_mul(2**32 - 1, 2**32 - 1) == (2**32 - 1) ** 2
    with pytest.raises(OverflowError):
        checked_add(NAT_MAX, 1)
    with pytest.raises(OverflowError):
        checked_mul(2**32, 2**32)


# ------------------------------------------------------------- divisor tests


@pytest.mark.parametrize("k,j,expected", [(3, 6, 1), (4, 6, 0), (2, 7, 0)])
def test_divisor_hit_examples(k, j, expected):
    assert divisor_hit(k, j) == expected


@pytest.mark.parametrize("j,k,expected", [(6, 3, 1), (7, 3, 0), (9, 3, 1)])
def test_delta_examples(j, k, expected):
    assert delta(j, k) == expected


@pytest.mark.parametrize("fn,args", [
    (divisor_hit, (1, 6)),
    (divisor_hit, (6, 6)),
    (divisor_hit, (5, 4)),
    (delta, (1, 2)),
    (delta, (6, 1)),
    (delta, (6, 6)),
])
def test_divisor_test_preconditions(fn, args):
    with pytest.raises(DomainError):
        fn(*args)


def test_divisor_tests_agree_exhaustively_to_500():
    for j in range(3, 501):
        for k in range(2, j):
            hit = divisor_hit(k, j)
            assert hit == delta(j, k)
            assert hit == (1 if j % k == 0 else 0)


@given(st.integers(min_value=3, max_value=20_000).flatmap(
    lambda j: st.tuples(st.just(j), st.integers(min_value=2, max_value=j - 1))
))
def test_divisor_tests_agree_random(jk):
    j, k = jk
    assert divisor_hit(k, j) == delta(j, k) == (1 if j % k == 0 else 0)


# ----------------------------------------------------------------- indicator


@pytest.mark.parametrize("j,expected", [(2, 1), (4, 0), (7, 1)])
def test_indicator_examples(j, expected):
    assert indicator(j, GCD) == expected
    assert indicator(j, DELTA) == expected


def test_indicator_rejects_small_j():
    for j in (0, 1):
        with pytest.raises(DomainError):
            indicator(j)


def test_indicator_matches_trial_division_to_2000():
    for j in range(2, 2001):
        expected = 1 if is_prime_trial(j) else 0
        assert indicator(j, GCD) == expected
        assert indicator(j, DELTA) == expected


@given(st.integers(min_value=2, max_value=30_000))
def test_indicator_variants_agree_and_match_oracle(j):
    expected = 1 if is_prime_trial(j) else 0
    assert indicator(j, GCD) == expected
    assert indicator(j, DELTA) == expected


@given(st.integers(min_value=2, max_value=3_000),
       st.sampled_from([GCD, DELTA]))
def test_counted_and_early_exit_paths_match_cached_value(j, variant):
    cached = indicator(j, variant)
    counter = OpCounts()
    assert indicator(j, variant, counter=counter) == cached
    assert indicator(j, variant, early_exit=True) == cached


def test_counted_indicator_tallies_sites():
    counter = OpCounts()
    assert indicator(9, GCD, counter=counter) == 0
    assert counter.gcd_calls == 7  # k = 2..8
    assert counter.inner_test_floors == 7
    assert counter.indicator_floors == 1
    assert counter.additions == 1  # the 1 + sum
    counter = OpCounts()
    assert indicator(9, DELTA, counter=counter) == 0
    assert counter.gcd_calls == 0
    assert counter.delta_calls == 7
    assert counter.inner_test_floors == 14  # two floors per delta


def test_early_exit_is_rejected_in_counted_runs():
    with pytest.raises(DomainError):
        indicator(9, GCD, counter=OpCounts(), early_exit=True)


# -------------------------------------------------------------- prefix count


@pytest.mark.parametrize("i,expected", [(1, 0), (5, 3), (7, 4)])
def test_prefix_count_examples(i, expected):
    assert prefix_count(i) == expected


def test_prefix_count_rejects_zero():
    with pytest.raises(DomainError):
        prefix_count(0)


@given(st.integers(min_value=1, max_value=2_000))
def test_prefix_count_equals_pi(i):
    expected = sum(1 for m in range(2, i + 1) if is_prime_trial(m))
    assert prefix_count(i, GCD) == expected
    assert prefix_count(i, DELTA) == expected


# ---------------------------------------------------------------------- step


@pytest.mark.parametrize("s,x,expected", [(0, 0, 1), (3, 3, 1), (4, 3, 0)])
def test_step_examples(s, x, expected):
    assert step(s, x) == expected


def test_step_equivalence_exhaustive_to_200():
    for s in range(201):
        for x in range(201):
            assert step(s, x) == (1 if s <= x else 0)


@given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=0, max_value=10**9))
def test_step_equivalence_random(s, x):
    assert step(s, x) == (1 if s <= x else 0)


def test_step_counts_two_floors_and_two_additions():
    counter = OpCounts()
    step(5, 9, counter=counter)
    assert counter.step_floors == 2
    assert counter.additions == 2


def test_step_overflow_at_the_nat_boundary():
    with pytest.raises(OverflowError):
        step(0, NAT_MAX)  # x + 1 leaves the range
    with pytest.raises(OverflowError):
        step(NAT_MAX, 0)  # 1 + floor(s/1) leaves the range
