"""The folded prime enumerator: f(x) = 1 + sum_{i=1}^{U(x)} A(i, x) = p_{x+1}.

Because S(i) = pi(i) is nondecreasing, the step A(i, x) = 1{pi(i) <= x} is a
nonincreasing {0,1} sequence that flips exactly at i = p_{x+1}.  With any
valid schedule (U(x) >= p_{x+1} - 1) the sum therefore counts p_{x+1} - 1
ones.  `evaluate` exploits the flip: once A reaches 0 the remaining terms
are identically zero, so the loop stops there with the sum unchanged.
Audited runs (see `audit`) and `trace` always sweep the full range.

Two evaluation modes differ only in how S(i) is produced:

* INCREMENTAL carries S(i) = S(i-1) + I(i),
* NAIVE recomputes S(i) from scratch with a fresh j-loop for every i
  (the triple-nested reading; cubic in the limit).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Tuple

from .core import IndicatorVariant, _indicator_value, indicator
from .nat import DomainError, RangeError, as_nat, checked_add
from .oracle import sieve_for_nth
from .schedules import Schedule, schedule_limit

TRACE_ROW_LIMIT = 10**5


class EvalMode(enum.Enum):
    NAIVE = "naive"
    INCREMENTAL = "incremental"


class TraceRow(NamedTuple):
    i: int
    indicator: int
    prefix: int
    step: int


@dataclass(frozen=True)
class TraceRecord:
    """Per-i breakdown of one enumerator run."""

    x: int
    schedule_used: Schedule
    limit: int
    rows: Tuple[TraceRow, ...]
    result: int

    @property
    def flip_index(self) -> int:
        """First i with step 0, or limit + 1 when every row steps 1."""
        for row in self.rows:
            if row.step == 0:
                return row.i
        return self.limit + 1


def _fold(
    x: int,
    limit: int,
    mode: EvalMode,
    variant: IndicatorVariant,
    counter=None,
    stop_at_flip: bool = False,
) -> int:
    s_x = checked_add(x, 1)
    incremental = mode is EvalMode.INCREMENTAL
    counting = counter is not None
    total = 0
    s = 0
    for i in range(1, limit + 1):
        if incremental:
            if i >= 2:
                s += (
                    indicator(i, variant, counter=counter)
                    if counting
                    else _indicator_value(i, variant)
                )
            if counting:
                counter.additions += 1
        else:
            s = 0
            if counting:
                for j in range(2, i + 1):
                    s += indicator(j, variant, counter=counter)
                    counter.additions += 1
            else:
                for j in range(2, i + 1):
                    s += _indicator_value(j, variant)
        q = s // s_x
        a = 1 // (1 + q)
        if counting:
            counter.step_floors += 2
            counter.additions += 2
        if stop_at_flip and a == 0:
            break
        total += a
        if counting:
            counter.additions += 1
    if counting:
        counter.additions += 1
    return checked_add(1, total)


def evaluate(
    x: int,
    schedule: Schedule = Schedule.LINLOG,
    mode: EvalMode = EvalMode.INCREMENTAL,
    variant: IndicatorVariant = IndicatorVariant.GCD,
) -> int:
    """f(x) = p_{x+1}.  Output is identical across schedules, modes, variants.

    The Willans schedule is accepted for x <= 62 (its limit must be exactly
    representable) but is only a comparison baseline, never the default.
    """
    x = as_nat(x, "x")
    limit = schedule_limit(schedule, x)
    return _fold(x, limit, mode, variant, stop_at_flip=True)


def trace(x: int, schedule: Schedule = Schedule.LINLOG) -> TraceRecord:
    """Full per-i breakdown (I, S, A) over i = 1..U(x); no truncation."""
    x = as_nat(x, "x")
    limit = schedule_limit(schedule, x)
    if limit > TRACE_ROW_LIMIT:
        raise RangeError(
            f"trace limit {limit} exceeds {TRACE_ROW_LIMIT} rows; "
            "use evaluate() for untraced evaluation"
        )
    s_x = x + 1
    rows = []
    s = 0
    total = 0
    for i in range(1, limit + 1):
        ind = _indicator_value(i, IndicatorVariant.GCD) if i >= 2 else 0
        s += ind
        a = 1 // (1 + s // s_x)
        rows.append(TraceRow(i=i, indicator=ind, prefix=s, step=a))
        total += a
    return TraceRecord(
        x=x, schedule_used=schedule, limit=limit, rows=tuple(rows), result=1 + total
    )


def record_lift(L: int, schedule: Schedule = Schedule.LINLOG) -> int:
    """For fixed L >= 2, the certified prime P* = f(L) = p_{L+1} > L."""
    L = as_nat(L, "L")
    if L < 2:
        raise DomainError(f"record_lift requires L >= 2, got {L}")
    p_star = evaluate(L, schedule, EvalMode.INCREMENTAL, IndicatorVariant.GCD)
    table = sieve_for_nth(L + 1)
    assert table.is_prime(p_star) and p_star > L, (
        f"record-lift postcondition failed at L={L}: got {p_star}"
    )
    return p_star
