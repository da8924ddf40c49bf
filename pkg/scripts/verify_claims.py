#!/usr/bin/env python3
"""Run the full claim-verification battery and print one PASS/FAIL line each.

Exit code 0 iff everything passes.  Heavier sweeps than the defaults:

    python scripts/verify_claims.py --x-max 10000 --audit-max 500
"""

from __future__ import annotations

import argparse
import sys
import time

from primefold import (
    EvalMode,
    IndicatorVariant,
    Schedule,
    audit_range,
    check_forward_count_axiom,
    check_lin_growth_bound,
    check_minimality,
    check_schedule_divergence,
    check_signature_separation,
    evaluate,
    record_lift,
    sieve_for_nth,
    square_schedule_base_cases,
    validate_schedule,
)

FAILS = 0


def ok_line(ok: bool, label: str, detail: str = "") -> None:
    global FAILS
    if not ok:
        FAILS += 1
    tail = f"  {detail}" if detail else ""
    print(f"{'PASS' if ok else 'FAIL'}  {label:<58s}{tail}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--x-max", type=int, default=2000)
    parser.add_argument("--sweep-max", type=int, default=200)
    parser.add_argument("--audit-max", type=int, default=200)
    args = parser.parse_args()

    t0 = time.perf_counter()
    table = sieve_for_nth(args.x_max + 1)

    r = validate_schedule(Schedule.SQUARE, args.x_max, table)
    ok_line(r.passed, f"square schedule covers p_(x+1)-1 on [0, {args.x_max}]")
    r = validate_schedule(Schedule.LINLOG, args.x_max, table)
    ok_line(r.passed, f"linlog schedule covers p_(x+1)-1 on [0, {args.x_max}]")
    r = validate_schedule(Schedule.WILLANS, min(args.x_max, 200), table)
    ok_line(r.passed, "willans limit 2^(x+1) covers p_(x+1)")
    r = square_schedule_base_cases(table)
    ok_line(r.passed, "square schedule base cases n = 1..5")
    r = check_lin_growth_bound(args.x_max, table)
    ok_line(r.passed, "real-valued linlog upper bound, x >= 5", f"min margin {r.min_slack:.4f}")

    bad = [
        x
        for x in range(args.sweep_max + 1)
        for sched in (Schedule.SQUARE, Schedule.LINLOG)
        for var in (IndicatorVariant.GCD, IndicatorVariant.DELTA)
        if evaluate(x, sched, EvalMode.INCREMENTAL, var) != table.nth_prime(x + 1)
    ]
    ok_line(not bad, f"f(x) = p_(x+1) sweep on [0, {args.sweep_max}] (4 combos)")

    bad = [l for l in range(2, 201) if record_lift(l) <= l]
    ok_line(not bad, "record-lift P* > L for L in [2, 200]")

    rows = audit_range(2, args.audit_max)
    ok_line(all(row.match for row in rows), f"operation counts match closed forms, U <= {args.audit_max}")

    r = check_signature_separation()
    ok_line(r.passed, "operator signatures pairwise distinct, palettes disjoint")
    r = check_schedule_divergence(100)
    ok_line(r.passed, "log-ratio (x+1)ln2 - ln u_lin(x) strictly increasing")
    r = check_minimality(args.x_max, table)
    ok_line(r.passed, "schedule minimality chain, x >= 5", f"min rel slack {r.min_slack:.3e}")
    r = check_forward_count_axiom(min(args.x_max, 200), table)
    ok_line(r.passed, "forward-count axiom on traced runs")

    print(f"\n{FAILS} failure(s) in {time.perf_counter() - t0:.1f}s")
    return 1 if FAILS else 0


if __name__ == "__main__":
    sys.exit(main())
