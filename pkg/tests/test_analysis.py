"""Signature separation, schedule divergence, minimality, axiom conformance."""

import math

import pytest

from primefold import (
    DomainError,
    RangeError,
    SignatureFamily,
    check_forward_count_axiom,
    check_minimality,
    check_schedule_divergence,
    check_signature_separation,
    signature,
    u_lin,
)


def test_signature_constants():
    assert signature(SignatureFamily.FOLDED).coords == (0, 0, 0, 0, 1, 1)
    assert signature(SignatureFamily.WILLANS).coords == (1, 1, 1, 0, 0, 0)
    assert signature(SignatureFamily.MILLS).coords == (0, 0, 1, 0, 0, 0)


def test_signatures_pairwise_distinct():
    vectors = [signature(f).coords for f in SignatureFamily]
    assert len(set(vectors)) == 3


def test_folded_and_willans_palettes_disjoint():
    folded = signature(SignatureFamily.FOLDED).coords
    willans = signature(SignatureFamily.WILLANS).coords
    assert tuple(a & w for a, w in zip(folded, willans)) == (0, 0, 0, 0, 0, 0)
    assert folded != signature(SignatureFamily.MILLS).coords


def test_signature_separation_report():
    report = check_signature_separation()
    assert report.passed
    assert report.violations == ()


def test_schedule_divergence():
    report = check_schedule_divergence(100)
    assert report.passed
    assert report.min_slack > 0  # every consecutive log-ratio increase
    # spot value: the log ratio matches a direct evaluation
    r10 = 11 * math.log(2.0) - math.log(u_lin(10))
    r100 = 101 * math.log(2.0) - math.log(u_lin(100))
    assert r100 > r10 + 10


def test_schedule_divergence_requires_x_max_10():
    with pytest.raises(DomainError):
        check_schedule_divergence(9)


def test_minimality_chain(big_sieve):
    report = check_minimality(200, big_sieve)
    assert report.passed
    assert report.min_slack > 1e-6
    # x = 5 anchor: p_6 - 1 = 12 vs 6(ln 6 + ln ln 6 - 1) - 1
    lower = 6 * (math.log(6) + math.log(math.log(6)) - 1.0) - 1.0
    assert lower == pytest.approx(7.254, abs=5e-3)
    assert 12 >= lower


def test_minimality_requires_x_max_5():
    with pytest.raises(DomainError):
        check_minimality(4)


def test_forward_count_axiom(small_sieve):
    report = check_forward_count_axiom(50, small_sieve)
    assert report.passed


def test_forward_count_axiom_trace_guard():
    with pytest.raises(RangeError):
        check_forward_count_axiom(201)
