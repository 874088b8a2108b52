"""The p-adic nonexistence test and its family specialisations."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional

from ..arith import is_perfect_square, is_sum_two_squares, square_class
from ..hilbert import hilbert_symbol, legendre_eq_solvable, relevant_primes
from ..srg import (
    CoTriangular,
    GraphInvariants,
    Multipartite,
    SpectralParams,
    Steiner,
    Symplectic,
    family_invariants,
    family_spectral,
)
from .params import Condition


@dataclass
class SieveResult:
    query: str
    conditions: list[Condition] = field(default_factory=list)
    primes: list[int] = field(default_factory=list)

    @property
    def failed(self) -> list[Condition]:
        return [c for c in self.conditions if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failed

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "reject"

    def add(self, label: str, passed: bool, witness=None) -> None:
        self.conditions.append(Condition(label, bool(passed), witness))

    def first_failure(self) -> Optional[Condition]:
        f = self.failed
        return f[0] if f else None


def _sym(a, b, p):
    return hilbert_symbol(a, b, p)


def main_test(sp: SpectralParams, inv: GraphInvariants, mu: int) -> SieveResult:
    """Check both parts of the main test for block graph invariants ``inv``."""
    f, g = sp.f, sp.g
    B = f + g + 1
    nu = (sp.rho - sp.sigma) * mu
    delta = inv.discriminant
    res = SieveResult(f"spectral {sp.rho},{sp.sigma},{f},{g} mu={mu}")

    lhs = square_class(nu) ** f
    rhs = square_class((f + 1) * B) * delta
    res.add("4.2a", lhs == rhs,
            None if lhs == rhs else f"nu^f ~ {lhs} but (f+1)(f+g+1)delta ~ {rhs}")

    primes = sorted(set(relevant_primes([nu, f + 1, B, delta.value, -1])) | set(inv.primes()))
    res.primes = primes
    cf = comb(f, 2) % 2
    for p in primes:
        left = (_sym(-1, nu, p) if cf else 1) * _sym(nu, f + 1, p)
        right = _sym(B, -(f + 1), p) * _sym(-(f + 1) * B, delta.value, p) * inv.eps(p)
        if left != right:
            res.add(f"4.2b(p={p})", False, f"p={p}")
    if not any(c.label.startswith("4.2b") for c in res.conditions):
        res.add("4.2b", True, f"checked p in {primes}")
    return res


def family_main_test(fam, mu: int) -> SieveResult:
    """Main test with the closed-form invariants of ``fam``."""
    return main_test(family_spectral(fam), family_invariants(fam), mu)


def _square(label: str, x: int) -> Condition:
    ok = is_perfect_square(x)
    return Condition(label, ok, None if ok else f"{x} is not a square")


def _two_squares(label: str, x: int) -> Condition:
    ok = is_sum_two_squares(x)
    return Condition(label, ok, None if ok else f"{x} is not a sum of two squares")


def _legendre(label: str, a: int, b: int) -> Condition:
    res = legendre_eq_solvable(a, b)
    sign = "-" if b < 0 else "+"
    return Condition(label, bool(res), None if res else
                     f"{a}x^2 {sign} {abs(b)}y^2 = z^2 unsolvable at p={res.witness}")


def _result(query: str, conds: list[Condition]) -> SieveResult:
    return SieveResult(query, conds)


def cor_4_3(m: int, n: int, mu: int) -> SieveResult:
    """Clauses for a strongly resolvable design with block graph K_{m x n}."""
    w = m * n - m + 1
    c: list[Condition] = []
    if m % 2 == 0:
        c.append(_square("4.3(a1)", w))
    elif n % 2 == 0:
        c.append(_square("4.3(a2)", w * mu))
    else:
        c.append(_square("4.3(a3)", n * w))
    m4, n4 = m % 4, n % 4
    if m4 == 2:
        c.append(_two_squares("4.3(b1)", n))
    if m4 == 3 and n4 == 2:
        c.append(_two_squares("4.3(b2)", n))
    if m4 == 3 and n4 == 0:
        c.append(_two_squares("4.3(b3)", w))
    if m4 == 1 and n4 == 2:
        c.append(_two_squares("4.3(b4)", n * w))
    if m % 2 and n % 2:
        if m4 != n4:
            sign = -1 if ((n - 1) // 2) % 2 else 1
            c.append(_legendre("4.3(b5)", mu, sign * n))
        elif m4 == 1:
            c.append(_legendre("4.3(b6)", n, -mu))
        else:
            bad = [p for p in relevant_primes([-mu, -n])
                   if hilbert_symbol(-mu, -n, p) != (-1 if p == 2 else 1)]
            c.append(Condition("4.3(b7)", not bad, f"p={bad[0]}" if bad else None))
    return _result(f"multipartite m={m} n={n} mu={mu}", c)


def cor_4_5(n: int, mu: int) -> SieveResult:
    """Clauses for a co-triangular design with block graph T_n*."""
    c: list[Condition] = []
    n4 = n % 4
    t = comb(n - 1, 2)
    if n4 == 1:
        c.append(_square("4.5(a1)", mu))
        sign = -1 if ((n - 1) // 4) % 2 else 1
        c.append(_legendre("4.5(b2)", n - 2, sign * 2))
    elif n4 == 2:
        c.append(_square("4.5(a2)", (n - 2) * mu))
        c.append(_two_squares("4.5(b3)", n - 1))
    elif n4 == 3:
        c.append(_square("4.5(a3)", n - 2))
        sign = -1 if ((n - 3) // 4) % 2 else 1
        c.append(_legendre("4.5(b4)", mu, sign * t))
    else:
        sign = -1 if (n // 4) % 2 else 1
        bad = [p for p in relevant_primes([mu, t, n - 2, 2, -1])
               if hilbert_symbol(mu, sign * t, p) != hilbert_symbol(n - 2, sign * 2, p)]
        c.append(Condition("4.5(b1)", not bad, f"p={bad[0]}" if bad else None))
    return _result(f"cotriangular n={n} mu={mu}", c)


def cor_4_6(d: int, mu: int) -> SieveResult:
    """Block graph Sp(2d, 2): the order 2^d mu must be a square."""
    return _result(f"symplectic d={d} q=2 mu={mu}", [_square("4.6", 2**d * mu)])


def cor_4_7(n: int, m: int, mu: int) -> SieveResult:
    """Clauses for a multi-Steiner design with block graph S_n(m)."""
    c: list[Condition] = []
    if m % 2 and n % 2 == 0:
        c.append(_square("4.7(a)", mu))
    w = m * n - m
    sign = -1 if comb(w, 2) % 2 else 1
    c.append(_legendre("4.7(b)", mu, sign * (w + 1)))
    return _result(f"steiner n={n} m={m} mu={mu}", c)


def family_corollary(fam, mu: int) -> SieveResult:
    if isinstance(fam, Multipartite):
        return cor_4_3(fam.m, fam.n, mu)
    if isinstance(fam, CoTriangular):
        return cor_4_5(fam.n, mu)
    if isinstance(fam, Symplectic) and fam.q == 2:
        return cor_4_6(fam.d, mu)
    if isinstance(fam, Steiner):
        return cor_4_7(fam.n, fam.m, mu)
    raise ValueError(f"no specialised corollary for {fam!r}")


def family_corollary_or_none(fam, mu: int) -> Optional[SieveResult]:
    if isinstance(fam, Symplectic) and (fam.q != 2 or fam.d < 3):
        return None
    try:
        return family_corollary(fam, mu)
    except ValueError:
        return None
