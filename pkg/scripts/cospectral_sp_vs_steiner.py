"""Compare closed-form invariants of Sp(2d, 2) and S_{2^(d-1)}(2^d + 1).

The two graphs share a spectrum; delta and eps_p can still tell them apart.
For d = 3 the direct computation on explicit graphs is printed as well.
"""

import argparse

from qsdesign import fixtures
from qsdesign.srg import Steiner, Symplectic, family_invariants, family_spectral, graph_invariants_direct


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d-max", type=int, default=9)
    args = ap.parse_args()
    print(f"{'d':>2}  {'delta(Sp)':>9}  {'delta(S)':>9}  eps_p(Sp) != eps_p(S)")
    for d in range(2, args.d_max + 1):
        sp_fam, st_fam = Symplectic(d, 2), Steiner(2 ** (d - 1), 2**d + 1)
        assert family_spectral(sp_fam) == family_spectral(st_fam)
        a, b = family_invariants(sp_fam), family_invariants(st_fam)
        primes = sorted(set(a.primes()) | set(b.primes()))
        differ = [p for p in primes if a.eps(p) != b.eps(p)]
        print(f"{d:>2}  {str(a.discriminant):>9}  {str(b.discriminant):>9}  {differ}")
    print()
    print("direct, d=3:")
    print("  Sp(6,2)      ", graph_invariants_direct(fixtures.symplectic(3)).describe())
    print("  S_4(9) (GF8) ", graph_invariants_direct(fixtures.hyperoval_steiner_graph()).describe())


if __name__ == "__main__":
    main()
