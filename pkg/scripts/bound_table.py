"""Tabulate prism, arc-index and crossing-number bounds against each other.

    python3 scripts/bound_table.py --max-crossing 12
"""

from __future__ import annotations

import argparse

from arcrope.arcpres import extremal, skip
from arcrope.bounds import bound_report
from arcrope.builder import build
from arcrope.curve import length


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-crossing", type=int, default=12)
    ap.add_argument("--no-build", action="store_true", help="skip building the extremal presentations")
    args = ap.parse_args()
    print(f"{'c':>3} {'alpha':>5} {'skip':>5} {'prism':>9} {'exact':>9} {'decimal':>9} {'built':>9}")
    for c in range(3, args.max_crossing + 1):
        rep = bound_report(c)
        built = float("nan") if args.no_build else length(build(extremal(rep.alpha_used)))
        assert args.no_build or skip(extremal(rep.alpha_used)) == rep.skip_bound
        print(
            f"{c:>3} {rep.alpha_used:>5} {rep.skip_bound:>5} {rep.prop1_value:>9.3f} "
            f"{rep.thm1_value:>9.3f} {rep.thm1_decimal:>9.3f} {built:>9.3f}"
        )


if __name__ == "__main__":
    main()
