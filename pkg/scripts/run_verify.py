#!/usr/bin/env python3
"""Run every seeded suite and print the pass/fail table."""

import argparse
import sys

from dmflip.verify import run_all


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("suites", nargs="*", help="suite names (default: all)")
    args = p.parse_args()
    results = run_all(args.seed, args.suites or None)
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
