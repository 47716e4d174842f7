#!/usr/bin/env python3
"""Sweep the divisor audits over a grid of (n, d) pairs and print a table.

Reproduces the headline verification runs:

    python3 scripts/run_audits.py                 # the default grid
    python3 scripts/run_audits.py --pairs 2:5 3:6 # a custom grid
"""

import argparse
import sys
import time

from hyperaut.classify import UnsupportedRangeError
from hyperaut.harness import audit_theorem

DEFAULT_PAIRS = ["2:5", "2:6", "3:4", "3:5"]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", nargs="+", default=DEFAULT_PAIRS,
                        help="n:d pairs to audit")
    parser.add_argument("--claims", nargs="+",
                        default=["thm-1.1-codim1", "thm-1.1-codim2"])
    args = parser.parse_args()

    failures = 0
    print(f"{'n':>2} {'d':>2} {'claim':<16} {'supports':>8} {'smooth':>6} "
          f"{'cases':>6} {'violations':>10} {'time':>7}")
    for pair in args.pairs:
        n, d = (int(x) for x in pair.split(":"))
        for claim in args.claims:
            start = time.perf_counter()
            try:
                report = audit_theorem(n, d, claim, keep_records=False)
            except UnsupportedRangeError as exc:
                print(f"{n:>2} {d:>2} {claim:<16} skipped: {exc}")
                continue
            elapsed = time.perf_counter() - start
            print(f"{n:>2} {d:>2} {claim:<16} {report.supports_total:>8} "
                  f"{report.supports_smooth:>6} {report.cases_examined:>6} "
                  f"{len(report.violations):>10} {elapsed:>6.1f}s")
            for v in report.violations:
                print(f"      VIOLATION {v.support} exps={v.exps} "
                      f"order={v.order}: {v.detail}")
            failures += len(report.violations)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
