"""Family-level feasibility, parameter enumerators and exclusion rules."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from ..arith import DomainError, divisors, is_perfect_square, is_prime_power
from ..srg import (
    Conference,
    GraphFamily,
    NonIntegralSpectrumError,
    Steiner,
    Symplectic,
    Triangular,
    family_spectral,
)
from .params import (
    DesignParams,
    FeasibilityReport,
    canonical,
    complement,
    derive_params,
    feasibility,
    mu_window,
)


def is_triangular(fam: GraphFamily) -> bool:
    return isinstance(fam, Triangular) or (isinstance(fam, Steiner) and fam.n == 2)


def conference_mu_window(q: int) -> range:
    """Defects allowed by the bounds for a conference graph on q vertices.

    The lower bound is below 1 for every q; the upper bound
    mu (1 + sqrt q) <= (q + 1)/2 is tested as 4 mu^2 q <= (q + 1 - 2 mu)^2.
    """
    mu = 1
    while q + 1 - 2 * mu >= 0 and 4 * mu * mu * q <= (q + 1 - 2 * mu) ** 2:
        mu += 1
    return range(1, mu)


def family_mu_window(fam: GraphFamily) -> range:
    if isinstance(fam, Conference):
        return conference_mu_window(fam.q)
    return mu_window(family_spectral(fam))


def family_feasibility(fam: GraphFamily, mu: int) -> FeasibilityReport:
    """Feasibility with the family-level exclusions folded in."""
    query = f"{fam} mu={mu}"
    try:
        sp = family_spectral(fam)
    except NonIntegralSpectrumError as exc:
        rep = FeasibilityReport(query)
        rep.add("2.3a", False, f"conference graph: {exc}")
        return rep
    rep = feasibility(sp, mu, query)
    if is_triangular(fam) and mu >= 2:
        rep.add("2.9", False, "triangular block graphs only occur with defect 1")
        rep.params = None
    return rep


# -- complete multipartite ------------------------------------------------------

@dataclass(frozen=True, order=True)
class Quadruple:
    """(alpha, l, l*, t) with l l* = alpha(alpha - 1) and alpha | (l + l*)^2 t."""

    alpha: int
    l: int
    lstar: int
    t: int

    def __post_init__(self):
        if self.alpha < 1 or min(self.l, self.lstar, self.t) < 0:
            raise DomainError("need alpha > 0 and l, l*, t >= 0")
        if self.l * self.lstar != self.alpha * (self.alpha - 1):
            raise DomainError("need l l* = alpha(alpha - 1)")
        if ((self.l + self.lstar) ** 2 * self.t) % self.alpha:
            raise DomainError("need alpha | (l + l*)^2 t")

    @property
    def n(self) -> int:
        return self.l + self.lstar + 2 * self.alpha

    @property
    def m(self) -> int:
        return self.t * self.n**2 // self.alpha + self.n + 1

    @property
    def mu(self) -> int:
        return (self.n - 1) * self.t + self.alpha

    @property
    def conjecture_holds(self) -> bool:
        """Conjectural only: alpha | t, i.e. m = n + 1 (mod n^2)."""
        return self.t % self.alpha == 0

    def params(self) -> DesignParams:
        a, l, t, n = self.alpha, self.l, Fraction(self.t, self.alpha), self.n
        s = (n - 1) * t + 1
        vals = dict(
            b=self.m * n,
            v=n * n * s,
            r=self.m * (a + l),
            k=n * s * (a + l),
            lam=(t * n + 1) * (a + l) ** 2 + l,
            lam1=n * s * l,
            lam2=s * (a + l) ** 2,
        )
        if any(Fraction(x).denominator != 1 for x in vals.values()):
            raise DomainError(f"non-integral parameters for {self}")
        return DesignParams(**{k: int(x) for k, x in vals.items()})

    def swapped(self) -> "Quadruple":
        return Quadruple(self.alpha, self.lstar, self.l, self.t)


def enum_multipartite(max_alpha: int, max_lsum: int, max_t: int
                      ) -> Iterator[tuple[Quadruple, tuple[DesignParams, DesignParams]]]:
    """Admissible quadruples in lexicographic order with their parameter pair.

    The first member of the pair is the quadruple's own parameter set; the
    second (from swapping l and l*) is its complement.
    """
    for alpha in range(1, max_alpha + 1):
        prod = alpha * (alpha - 1)
        if prod == 0:
            pairs = sorted({(0, s) for s in range(max_lsum + 1)} | {(s, 0) for s in range(max_lsum + 1)})
        else:
            pairs = sorted((d, prod // d) for d in divisors(prod) if d + prod // d <= max_lsum)
        for l, ls in pairs:
            for t in range(max_t + 1):
                if ((l + ls) ** 2 * t) % alpha:
                    continue
                qd = Quadruple(alpha, l, ls, t)
                yield qd, (qd.params(), qd.swapped().params())


def quadruple_for(m: int, n: int, mu: int) -> Optional[Quadruple]:
    """Invert the bijection: the quadruple with these (n, m, mu), if any."""
    for alpha in range(1, mu + 1):
        if (mu - alpha) % (n - 1):
            continue
        t = (mu - alpha) // (n - 1)
        if t * n * n != alpha * (m - n - 1):
            continue
        s = n - 2 * alpha
        disc = s * s - 4 * alpha * (alpha - 1)
        if s < 0 or not is_perfect_square(disc):
            continue
        y = math.isqrt(disc)
        l = (s + y) // 2
        try:
            return Quadruple(alpha, l, s - l, t)
        except DomainError:
            continue
    return None


def affine_resolvable(n: int, t: int) -> DesignParams:
    """Parameters of AD(n, t)."""
    return Quadruple(1, 0, n - 2, t).params()


def compose_params(ad: DesignParams, sym: tuple[int, int, int]) -> DesignParams:
    """Parameters of the composition of an affine resolvable design with a
    symmetric 2-(n, k2, lambda2) design on the n blocks of a parallel class.
    """
    n, k2, lam2 = sym
    if ad.lam1 != 0:
        raise DomainError("first design must be affine resolvable (lambda1 = 0)")
    if ad.v % ad.k or ad.v // ad.k != n:
        raise DomainError(f"parallel classes have {ad.v // ad.k} blocks, symmetric design has {n} points")
    if not (0 < k2 < n) or k2 * (k2 - 1) != lam2 * (n - 1):
        raise DomainError(f"({n},{k2},{lam2}) is not a symmetric design parameter triple")
    b, v = ad.b, ad.v
    k = ad.k * k2
    r = b * k // v
    lam = r * (k - 1) // (v - 1)
    same_class = lam2 * ad.k
    other_class = k2 * k2 * ad.lam2
    lo, hi = sorted((same_class, other_class))
    return DesignParams(b=b, v=v, r=r, k=k, lam=lam, lam1=lo, lam2=hi)


def compose_quadruple(ad_n: int, ad_t: int, sym: tuple[int, int, int]) -> Quadruple:
    """Quadruple matching the composition: (order, balance, n - 2 k2 + balance, order t')."""
    n, k2, lam2 = sym
    alpha = k2 - lam2
    return Quadruple(alpha, lam2, n - 2 * k2 + lam2, alpha * ad_t)


# -- co-triangular ---------------------------------------------------------------

def cotriangular_params(l: int, lstar: int, mu: int) -> DesignParams:
    n = 4 * mu + 1 + l + lstar
    h = Fraction(n, 2)
    vals = dict(
        b=math.comb(n, 2), v=math.comb(n - 1, 2),
        r=h * (l + 2 * mu), k=(h - 1) * (l + 2 * mu),
        lam=h * l + 2 * mu, lam1=(h - 1) * l + mu, lam2=(h - 1) * l + 2 * mu,
    )
    for name, x in vals.items():
        if Fraction(x).denominator != 1:
            raise DomainError(f"{name} is not integral for (l, l*, mu) = ({l}, {lstar}, {mu})")
    return DesignParams(**{k: int(x) for k, x in vals.items()})


def enum_cotriangular(mu: int, max_n: Optional[int] = None
                      ) -> Iterator[tuple[int, int, int, DesignParams]]:
    """(l, l*, n, params) for l l* = 4 mu (mu - 1) and n = 4 mu + 1 + l + l*.

    For mu = 1 the family (0, s), (s, 0) is infinite; it is streamed by
    increasing n and stops at ``max_n`` when one is given.
    """
    if mu < 1:
        raise DomainError("mu must be positive")
    base = 4 * mu + 1
    if mu == 1:
        for s in itertools.count():
            if max_n is not None and base + s > max_n:
                return
            for l, ls in sorted({(0, s), (s, 0)}):
                yield l, ls, base + s, cotriangular_params(l, ls, mu)
        return
    prod = 4 * mu * (mu - 1)
    for l in divisors(prod):
        ls = prod // l
        n = base + l + ls
        if max_n is not None and n > max_n:
            continue
        yield l, ls, n, cotriangular_params(l, ls, mu)


# -- symplectic, q > 2 ---------------------------------------------------------------

def check_symplectic(q: int, d: int) -> FeasibilityReport:
    """The three conditions for Sp(2d, q), q > 2, to be a block graph."""
    if q == 2:
        raise ValueError("q = 2: Sp(2d, 2) has Steiner-graph parameters; use the Steiner path")
    if not is_prime_power(q) or d < 2:
        raise DomainError("need q a prime power > 2 and d >= 2")
    rep = FeasibilityReport(f"symplectic d={d} q={q}")
    cong = q * (q ** (d - 1) - 1) % 8
    rep.add("2.6(congruence)", cong == 6, None if cong == 6 else f"q(q^(d-1)-1) = {cong} mod 8")
    top = q**d - q + 2
    mu_ok = top % 8 == 0
    rep.add("2.6(mu)", mu_ok, f"mu={top // 8}" if mu_ok else f"(q^d-q+2)/8 = {Fraction(top, 8)}")
    x = ((q**d - 1) // (q - 1)) ** 2 - q**d * ((q ** (d - 1) - 1) // (q - 1))
    sq = is_perfect_square(x)
    rep.add("2.6(square)", sq, None if sq else f"{x} is not a square")
    if rep.feasible:
        rep.params = derive_params(family_spectral(Symplectic(d, q)), top // 8)
    return rep


def search_symplectic(qs, ds) -> Iterator[tuple[int, int, FeasibilityReport]]:
    """Bounded search over prime powers q > 2 and dimensions d in the given windows."""
    for q in qs:
        if q <= 2 or not is_prime_power(q):
            continue
        for d in ds:
            if d >= 2:
                yield q, d, check_symplectic(q, d)


# -- Steiner -------------------------------------------------------------------------------

def steiner_params(n: int, m: int) -> DesignParams:
    v = m * n - m + 1
    return DesignParams(b=m * v // n, v=v, r=m, k=n, lam=1, lam1=0, lam2=1)


def enum_steiner(n: int, mu: int, max_m: Optional[int] = None
                 ) -> Iterator[tuple[int, tuple[DesignParams, DesignParams]]]:
    """Feasible (m, parameter pair) for block graph S_n(m) and defect mu, m ascending.

    For mu >= 2 the candidates come from factorizations u w = n^2 mu (mu - 1)
    with mn - m + 1 - 2 n mu = u + w; for mu = 1 every admissible m up to
    ``max_m`` is streamed.
    """
    if n < 2 or mu < 1:
        raise DomainError("need n >= 2 and mu >= 1")
    if mu == 1:
        if max_m is None:
            raise DomainError("mu = 1 is an infinite family; give max_m")
        for m in range(n + 1, max_m + 1):
            if m * (m - 1) % n == 0:
                D = steiner_params(n, m)
                yield m, canonical((D, complement(D)))
        return
    if n == 2:
        return  # triangular block graphs need defect 1
    N = n * n * mu * (mu - 1)
    ms = set()
    for u in divisors(N):
        w = N // u
        if u < w:
            continue
        num = u + w + 2 * n * mu - 1
        if num % (n - 1):
            continue
        m = num // (n - 1)
        if m <= n or m * (m - 1) % n or (max_m is not None and m > max_m):
            continue
        ms.add(m)
    for m in sorted(ms):
        rep = feasibility(family_spectral(Steiner(n, m)), mu)
        if rep.feasible:
            yield m, rep.params


def triangular_stream(max_m: int, mu: int) -> Iterator[tuple[int, FeasibilityReport]]:
    """Feasible triangular cases; empty for mu >= 2."""
    for m in range(5, max_m + 1):
        rep = family_feasibility(Triangular(m), mu)
        if rep.feasible:
            yield m, rep
