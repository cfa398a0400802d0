#!/usr/bin/env python3
"""Run the full verification suite and print one line per check.

Equivalent to `graphburn verify`, kept as a script so the whole battery can
be run (and timed) without remembering CLI flags.
"""

import sys
import time

from graphburning.verify import run_checks


def main() -> int:
    start = time.perf_counter()
    report = run_checks()
    for c in report.checks:
        print(f"{c.status.upper():4s} {c.check_id}")
        if c.status != "pass":
            print(f"     {c.statement}")
            print(f"     details: {c.details}")
    elapsed = time.perf_counter() - start
    print(f"{sum(c.status == 'pass' for c in report.checks)}/"
          f"{len(report.checks)} checks passed in {elapsed:.1f}s")
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
