#!/usr/bin/env python3
"""Sweep positivity and Laurent exactness over a grid of clusters.

Expands x_k in every cluster (x_m, x_{m+1}) for each requested exchange
type and reports failures and skipped cells.  Exit code follows the worst
report: 0 all pass, 1 a failure, 3 inconclusive cells remain.
"""

import argparse
import sys

from rank2cluster import ExchangeType, check_positivity_range


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "--types",
        default="1,1 1,2 2,1 1,3 3,1 2,2 2,3 3,2 3,3",
        help="space-separated b,c pairs",
    )
    ap.add_argument("--k-min", type=int, default=-6)
    ap.add_argument("--k-max", type=int, default=8)
    ap.add_argument("--m-min", type=int, default=-3)
    ap.add_argument("--m-max", type=int, default=3)
    ap.add_argument("--checks", default="laurent,positivity")
    ap.add_argument("--budget-seconds", type=float, default=None)
    ap.add_argument("--max-terms", type=int, default=None)
    ap.add_argument("--verbose", action="store_true", help="print every cell, not just totals")
    args = ap.parse_args()

    worst = 0
    for pair in args.types.split():
        b, c = (int(x) for x in pair.split(","))
        report = check_positivity_range(
            ExchangeType(b, c),
            args.k_min,
            args.k_max,
            args.m_min,
            args.m_max,
            checks=tuple(args.checks.split(",")),
            budget_seconds=args.budget_seconds,
            max_predicted_terms=args.max_terms,
        )
        if args.verbose:
            print(report.summary())
        else:
            print(report.summary().splitlines()[0])
            for item in report.items:
                if item.status != "pass":
                    print(f"  {item.label}: {item.status.upper()} ({item.detail})")
        worst = max(worst, report.exit_code())
    return worst


if __name__ == "__main__":
    sys.exit(main())
