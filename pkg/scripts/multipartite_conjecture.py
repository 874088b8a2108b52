"""List admissible quadruples where alpha does not divide t.

These are the cases where the conjectured congruence m = n + 1 (mod n^2)
fails at the parameter level; the sieve verdict is shown next to each.
"""

import argparse

from qsdesign.designs import cor_4_3, enum_multipartite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-alpha", type=int, default=12)
    ap.add_argument("--max-lsum", type=int, default=60)
    ap.add_argument("--max-t", type=int, default=4)
    args = ap.parse_args()
    print("alpha  l  l*  t     n      m   mu  sieve")
    for q, _ in enum_multipartite(args.max_alpha, args.max_lsum, args.max_t):
        if q.conjecture_holds or q.l > q.lstar:
            continue
        verdict = cor_4_3(q.m, q.n, q.mu)
        bad = verdict.first_failure()
        tag = "pass" if bad is None else f"reject {bad.label}"
        print(f"{q.alpha:>5} {q.l:>2} {q.lstar:>3} {q.t:>2} {q.n:>5} {q.m:>6} {q.mu:>4}  {tag}")


if __name__ == "__main__":
    main()
