"""Regenerate the small multi-Steiner parameter table.

    python scripts/regen_table1.py [--format csv|json|table] [--max-n 6] [--max-mu 4]
"""

import argparse

from qsdesign.designs import TableCaps, render, table1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("csv", "json", "table"), default="table")
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-mu", type=int, default=4)
    ap.add_argument("--max-v", type=int)
    args = ap.parse_args()
    rows = table1(TableCaps(max_n=args.max_n, max_mu=args.max_mu, max_v=args.max_v))
    print(render(rows, args.format), end="")
    if args.format == "table":
        for r in rows:
            if r.rejected:
                print(f"row {r.number}: {r.witness}")


if __name__ == "__main__":
    main()
