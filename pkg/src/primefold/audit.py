"""Instrumented re-execution with exact operation-count checks.

Counted runs re-evaluate the folded expression with every primitive tallied
at its site and no shortcut of any kind: the inner k-loop always reaches
j-1 and the outer i-loop always reaches the forced limit U.  The measured
divisor-test counts must then match the closed forms

    naive (triple-nested):   (U-2)(U-1)U / 6
    incremental (carry S):   (U-2)(U-1) / 2

and every audited run performs exactly 2U step floors.

Tally conventions: one gcd call and one floor per gcd divisor test; one
delta evaluation and two floors per gcd-free divisor test; the additions
tally covers the fold's own + sites (indicator's 1+sum, prefix update,
step's x+1 and 1+q, outer accumulation, final 1+sum) while the k-loop's
internal accumulation belongs to the divisor-test tally.  The per-indicator
enclosing floor is recorded separately (indicator_floors) and not asserted
against a closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .core import IndicatorVariant
from .enumerator import EvalMode, _fold
from .nat import DomainError, RangeError, as_nat, checked_mul
from .oracle import SieveTable, build_sieve

NAIVE_LIMIT_MAX = 2000  # cubic-cost guard for counted naive runs


@dataclass
class OpCounts:
    """Mutable tally context for one counted run."""

    gcd_calls: int = 0
    delta_calls: int = 0
    inner_test_floors: int = 0
    indicator_floors: int = 0
    step_floors: int = 0
    additions: int = 0

    @property
    def divisor_tests(self) -> int:
        return self.gcd_calls + self.delta_calls

    def to_dict(self) -> dict:
        return {
            "gcd_calls": self.gcd_calls,
            "delta_calls": self.delta_calls,
            "inner_test_floors": self.inner_test_floors,
            "indicator_floors": self.indicator_floors,
            "step_floors": self.step_floors,
            "additions": self.additions,
        }


@dataclass(frozen=True)
class AuditRow:
    """One (U, mode) audit: measured tallies vs. the predicted closed form."""

    u: int
    mode: EvalMode
    variant: IndicatorVariant
    measured: OpCounts
    predicted_gcd: int
    match: bool = field(init=False)

    def __post_init__(self):
        ok = (
            self.measured.divisor_tests == self.predicted_gcd
            and self.measured.step_floors == 2 * self.u
        )
        object.__setattr__(self, "match", ok)

    def to_dict(self) -> dict:
        return {
            "u": self.u,
            "mode": self.mode.value,
            "variant": self.variant.value,
            "measured": self.measured.to_dict(),
            "predicted_gcd": self.predicted_gcd,
            "match": self.match,
        }


def closed_form_naive(u: int) -> int:
    """(U-2)(U-1)U / 6, exactly (three consecutive integers divide by 6)."""
    u = as_nat(u, "u")
    if u < 2:
        raise DomainError(f"closed_form_naive requires U >= 2, got {u}")
    return checked_mul(checked_mul(u - 2, u - 1), u) // 6


def closed_form_incremental(u: int) -> int:
    """(U-2)(U-1) / 2, exactly."""
    u = as_nat(u, "u")
    if u < 2:
        raise DomainError(f"closed_form_incremental requires U >= 2, got {u}")
    return checked_mul(u - 2, u - 1) // 2


def run_counted(
    x: int,
    u_override: int,
    mode: EvalMode = EvalMode.INCREMENTAL,
    variant: IndicatorVariant = IndicatorVariant.GCD,
) -> Tuple[int, OpCounts]:
    """Evaluate with the schedule forced to the constant `u_override`, counting.

    Returns (enumerator value, measured tallies).  Full loops, no caching,
    no early exit of any kind.
    """
    x = as_nat(x, "x")
    u_override = as_nat(u_override, "u_override")
    if u_override < 1:
        raise DomainError(f"run_counted requires U >= 1, got {u_override}")
    if mode is EvalMode.NAIVE and u_override > NAIVE_LIMIT_MAX:
        raise RangeError(
            f"counted naive runs are limited to U <= {NAIVE_LIMIT_MAX} (cubic cost)"
        )
    counter = OpCounts()
    value = _fold(x, u_override, mode, variant, counter=counter, stop_at_flip=False)
    return value, counter


def audit_range(
    u_min: int,
    u_max: int,
    modes: Sequence[EvalMode] = (EvalMode.NAIVE, EvalMode.INCREMENTAL),
    variant: IndicatorVariant = IndicatorVariant.GCD,
    table: Optional[SieveTable] = None,
) -> Tuple[AuditRow, ...]:
    """Audit every U in [u_min, u_max] under the given modes.

    x is pinned to pi(U) so the step never flips inside [1, U] and the
    closed forms apply to full loops.
    """
    u_min = as_nat(u_min, "u_min")
    u_max = as_nat(u_max, "u_max")
    if not 2 <= u_min <= u_max:
        raise DomainError(f"audit_range requires 2 <= u_min <= u_max, got [{u_min}, {u_max}]")
    if EvalMode.NAIVE in modes and u_max > NAIVE_LIMIT_MAX:
        raise RangeError(f"naive audit rows are limited to U <= {NAIVE_LIMIT_MAX}")
    if table is None or table.limit < u_max:
        table = build_sieve(max(u_max, 2))
    rows = []
    for u in range(u_min, u_max + 1):
        x = table.pi(u)
        for mode in modes:
            _, measured = run_counted(x, u, mode, variant)
            predicted = (
                closed_form_naive(u)
                if mode is EvalMode.NAIVE
                else closed_form_incremental(u)
            )
            rows.append(
                AuditRow(u=u, mode=mode, variant=variant, measured=measured, predicted_gcd=predicted)
            )
    return tuple(rows)
