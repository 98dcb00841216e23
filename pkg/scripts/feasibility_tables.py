#!/usr/bin/env python3
"""Print the boundary-feasibility enumerations behind the gadget arguments.

Lists every feasible coloring per scenario so the forcing behavior of the
gadgets can be eyeballed, then re-runs the composition argument:

    python3 scripts/feasibility_tables.py
"""
from __future__ import annotations

import argparse

from crumby.lemmas import all_lemma_reports


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--quick",
        action="store_true",
        help="skip the exhaustive cross-check inside the composition step",
    )
    args = parser.parse_args()

    failures = 0
    for report in all_lemma_reports(use_exhaustive=not args.quick):
        print(report.human())
        for coloring in report.colorings:
            print(f"    {coloring.to_text()}")
        failures += 0 if report.passed else 1
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
