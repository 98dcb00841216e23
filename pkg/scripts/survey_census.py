#!/usr/bin/env python3
"""Survey the built-in census of small connected graphs for crumby colorability.

Runs the filtered family order by order, cross-checking every negative
answer with a second solver (and the exhaustive oracle where it fits),
then prints the per-order table.

    python3 scripts/survey_census.py --max-n 7
    python3 scripts/survey_census.py --biconnected --report out/survey.txt
"""
from __future__ import annotations

import argparse
import sys

from crumby import SurveyFilters, generate_small, survey_stream


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=7, help="largest order to include")
    parser.add_argument("--no-subcubic", action="store_true")
    parser.add_argument("--no-tw2", action="store_true")
    parser.add_argument("--biconnected", action="store_true")
    parser.add_argument("--report", help="also write the table to this file")
    args = parser.parse_args()

    filters = SurveyFilters(
        subcubic=not args.no_subcubic,
        tw2=not args.no_tw2,
        biconnected=args.biconnected,
    )
    lines = [line for n in range(1, args.max_n + 1) for line in generate_small(n)]
    report = survey_stream(lines, filters=filters)
    text = "\n".join(report.text_lines()) + "\n"
    sys.stdout.write(text)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    return 0 if report.unsat == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
