#!/usr/bin/env python3
"""Cross-check folded cluster characters against the exchange recurrence.

For each exchange type and index k, resolves the cluster-category object,
computes its character via quiver-Grassmannian Euler characteristics,
folds it to two variables, and compares with the symbolic recurrence.
"""

import argparse
import sys

from rank2cluster import CheckReport, verify_folding


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "--types",
        default="1,1 1,2 2,1 2,2 2,3 3,2 3,3",
        help="space-separated b,c pairs",
    )
    ap.add_argument("--k-min", type=int, default=-1)
    ap.add_argument("--k-max", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    worst = 0
    for pair in args.types.split():
        b, c = (int(x) for x in pair.split(","))
        report = CheckReport(f"folding vs recurrence at (b,c)=({b},{c})")
        for k in range(args.k_min, args.k_max + 1):
            report.extend(verify_folding(b, c, k, seed=args.seed))
        print(report.summary())
        worst = max(worst, report.exit_code())
    return worst


if __name__ == "__main__":
    sys.exit(main())
