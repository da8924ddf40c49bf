#!/usr/bin/env python3
"""Print measured vs. predicted operation counts for a range of limits U.

Shows the cubic/quadratic divisor-test growth of the two evaluation modes
and the exact 2U step floors.
"""

from __future__ import annotations

import argparse

from primefold import IndicatorVariant, audit_range


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--u-min", type=int, default=2)
    parser.add_argument("--u-max", type=int, default=40)
    parser.add_argument("--variant", choices=["gcd", "delta"], default="gcd")
    args = parser.parse_args()

    variant = IndicatorVariant(args.variant)
    rows = audit_range(args.u_min, args.u_max, variant=variant)
    print(f"{'U':>5s}  {'mode':<11s}  {'tests':>9s}  {'predicted':>9s}  {'step_floors':>11s}  {'additions':>9s}")
    for row in rows:
        print(
            f"{row.u:5d}  {row.mode.value:<11s}  {row.measured.divisor_tests:9d}"
            f"  {row.predicted_gcd:9d}  {row.measured.step_floors:11d}"
            f"  {row.measured.additions:9d}"
        )
    mismatches = [row for row in rows if not row.match]
    print(f"\n{len(rows)} rows, {len(mismatches)} mismatch(es)")


if __name__ == "__main__":
    main()
