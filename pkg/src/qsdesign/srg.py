"""Strongly regular graphs: spectral parameters, recognition, idempotents
and the discriminant / p-adic invariants delta(G), eps_p(G).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Mapping, Optional, Union

import numpy as np

from .arith import (
    DomainError,
    SquareClass,
    is_prime_power,
    square_class,
    square_class_of_power,
)
from .graphio import AdjacencyMatrix
from .hilbert import hilbert_symbol, relevant_primes
from .quadform import (
    SymMatrix,
    determinant,
    diagonalize,
    hasse_of_diag,
    select_independent_columns,
)


class SRGError(ValueError):
    """The graph is not a connected strongly regular graph with three eigenvalues."""


class NonIntegralSpectrumError(SRGError):
    """Conference graph on a non-square number of vertices: irrational eigenvalues."""


class NoClosedFormError(ValueError):
    pass


@dataclass(frozen=True)
class SpectralParams:
    """(rho, sigma, f, g) of a connected SRG with integral spectrum."""

    rho: int
    sigma: int
    f: int
    g: int

    def __post_init__(self):
        for name in ("rho", "sigma", "f", "g"):
            if not isinstance(getattr(self, name), int):
                raise DomainError(f"{name} must be an integer")
        if not (self.rho >= 0 > self.sigma):
            raise DomainError("need rho >= 0 > sigma")
        if self.f < 1 or self.g < 1:
            raise DomainError("multiplicities must be positive")
        a, b, c, d = self.a, self.b, self.c, self.d
        if a <= self.rho or a >= b - 1:
            raise DomainError(f"degree a={a} out of range for b={b}")
        if c < 0 or d < 1:
            raise DomainError(f"inconsistent SRG parameters (c={c}, d={d})")
        if a * (a - c - 1) != (b - a - 1) * d:
            raise DomainError("edge count identity fails: not realisable as an SRG")
        if a * a + self.f * self.rho**2 + self.g * self.sigma**2 != a * b:
            raise DomainError("trace identity fails: not realisable as an SRG")

    @property
    def a(self) -> int:
        """Degree."""
        return -self.f * self.rho - self.g * self.sigma

    @property
    def b(self) -> int:
        """Number of vertices."""
        return self.f + self.g + 1

    @property
    def c(self) -> int:
        """Common neighbours of an adjacent pair."""
        return self.a + self.rho + self.sigma + self.rho * self.sigma

    @property
    def d(self) -> int:
        """Common neighbours of a non-adjacent pair."""
        return self.a + self.rho * self.sigma

    def srg_tuple(self) -> tuple[int, int, int, int]:
        return self.b, self.a, self.c, self.d


def spectral_from_srg(b: int, a: int, c: int, d: int) -> SpectralParams:
    """Spectral parameters from srg(b, a, c, d); rejects irrational spectra."""
    disc = (c - d) ** 2 + 4 * (a - d)
    s = math.isqrt(disc)
    if s * s != disc:
        raise NonIntegralSpectrumError(
            f"eigenvalues of srg{(b, a, c, d)} are irrational: this is a conference "
            "graph on a non-square number of vertices, excluded from the theory")
    if (c - d + s) % 2:
        raise NonIntegralSpectrumError("half-integral eigenvalues")
    rho, sigma = (c - d + s) // 2, (c - d - s) // 2
    num = -a - (b - 1) * sigma
    if rho == sigma or num % (rho - sigma):
        raise SRGError("non-integral multiplicities")
    f = num // (rho - sigma)
    return SpectralParams(rho, sigma, f, b - 1 - f)


# -- families ----------------------------------------------------------------

@dataclass(frozen=True)
class Multipartite:
    """Complete multipartite K_{m x n}: m parts of size n."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise DomainError("multipartite needs m, n >= 2")


@dataclass(frozen=True)
class CoTriangular:
    """Complement of the triangular graph T_n."""

    n: int

    def __post_init__(self):
        if self.n < 5:
            raise DomainError("co-triangular needs n >= 5")


@dataclass(frozen=True)
class Symplectic:
    """Non-orthogonality graph of a 2d-dimensional symplectic space over GF(q)."""

    d: int
    q: int

    def __post_init__(self):
        if self.d < 2 or not is_prime_power(self.q):
            raise DomainError("symplectic needs d >= 2 and q a prime power")


@dataclass(frozen=True)
class Steiner:
    """Block graph of a 2-(mn-m+1, n, 1) design (replication m)."""

    n: int
    m: int

    def __post_init__(self):
        if not (2 <= self.n < self.m) or (self.m * (self.m - 1)) % self.n:
            raise DomainError("Steiner needs 2 <= n < m and n | m(m-1)")


@dataclass(frozen=True)
class Triangular:
    """Triangular graph T_m (line graph of K_m), i.e. S_2(m-1)."""

    m: int

    def __post_init__(self):
        if self.m < 5:
            raise DomainError("triangular needs m >= 5")


@dataclass(frozen=True)
class Conference:
    """Conference graph on q vertices (e.g. Paley)."""

    q: int

    def __post_init__(self):
        if self.q < 5 or self.q % 4 != 1:
            raise DomainError("conference graphs need q = 1 mod 4, q >= 5")


GraphFamily = Union[Multipartite, CoTriangular, Symplectic, Steiner, Triangular, Conference]


def family_spectral(fam: GraphFamily) -> SpectralParams:
    if isinstance(fam, Multipartite):
        m, n = fam.m, fam.n
        return SpectralParams(0, -n, m * (n - 1), m - 1)
    if isinstance(fam, CoTriangular):
        n = fam.n
        return SpectralParams(1, -(n - 3), n * (n - 3) // 2, n - 1)
    if isinstance(fam, Symplectic):
        d, q = fam.d, fam.q
        f = q * (q ** (d - 1) - 1) * (q**d + 1) // (2 * (q - 1))
        g = q * (q ** (d - 1) + 1) * (q**d - 1) // (2 * (q - 1))
        return SpectralParams(q ** (d - 1), -(q ** (d - 1)), f, g)
    if isinstance(fam, Steiner):
        n, m = fam.n, fam.m
        f = m * (n - 1)
        g = m * (m - n + 1) - 1 - m * (m - 1) // n
        return SpectralParams(m - n - 1, -n, f, g)
    if isinstance(fam, Triangular):
        m = fam.m
        return SpectralParams(m - 4, -2, m - 1, comb(m - 1, 2) - 1)
    if isinstance(fam, Conference):
        q = fam.q
        r = math.isqrt(q)
        if r * r != q:
            raise NonIntegralSpectrumError(
                f"conference graph on {q} vertices has irrational eigenvalues (-1 +- sqrt({q}))/2")
        h = (q - 1) // 2
        return SpectralParams((r - 1) // 2, -(r + 1) // 2, h, h)
    raise TypeError(f"unknown family {fam!r}")


# -- invariants -----------------------------------------------------------------

@dataclass(frozen=True)
class GraphInvariants:
    """delta(G) and eps_p(G); ``hasse`` covers every prime where eps_p may be -1."""

    discriminant: SquareClass
    hasse: Mapping[int, int] = field(default_factory=dict)

    def eps(self, p: int) -> int:
        return self.hasse.get(p, 1)

    def primes(self) -> list[int]:
        return sorted(self.hasse)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphInvariants):
            return NotImplemented
        if self.discriminant != other.discriminant:
            return False
        return all(self.eps(p) == other.eps(p) for p in set(self.hasse) | set(other.hasse))

    def __hash__(self):
        return hash((self.discriminant,
                     tuple(sorted(p for p, v in self.hasse.items() if v == -1))))

    def describe(self) -> str:
        eps = ", ".join(f"eps_{p}={v:+d}" for p, v in sorted(self.hasse.items()))
        return f"delta={self.discriminant}; {eps}"


def _closed_form(delta: SquareClass, args: list, eps: Callable[[int], int]) -> GraphInvariants:
    primes = relevant_primes(args + [delta.value])
    return GraphInvariants(delta, {p: eps(p) for p in primes})


def _pow(x: int, e: int) -> int:
    """x**e for e taken mod 2 (Hilbert symbols are +-1)."""
    return x if e % 2 else 1


def family_invariants(fam: GraphFamily) -> GraphInvariants:
    """Closed-form delta and eps_p for the four families that have one."""
    H = hilbert_symbol
    if isinstance(fam, Multipartite):
        m, n = fam.m, fam.n
        delta = square_class(m) * square_class_of_power(n, m - 1)
        return _closed_form(delta, [-1, m, n], lambda p: (
            _pow(H(-1, n, p), comb(m - 1, 2)) * _pow(H(m, n, p), m) * H(-1, m, p)))
    if isinstance(fam, CoTriangular):
        n = fam.n
        delta = square_class(n) * square_class_of_power(n - 2, n - 1)
        return _closed_form(delta, [-1, n, n - 2], lambda p: (
            _pow(H(-1, n - 2, p), comb(n - 1, 2)) * _pow(H(n - 2, n, p), n) * H(-1, n, p)))
    if isinstance(fam, Symplectic):
        if fam.q != 2:
            raise NoClosedFormError("closed-form invariants are only known for Sp(2d, 2)")
        d = fam.d
        delta = square_class_of_power(2, d - 1) * square_class(2**d + 1)
        t = 2 ** (2 * d) - 1
        return _closed_form(delta, [2, t], lambda p: _pow(H(2, t, p), d))
    if isinstance(fam, Steiner):
        n, m = fam.n, fam.m
        delta = square_class(m * n) * square_class_of_power(m - 1, m * (n - 1))
        w = m * n - m
        return _closed_form(delta, [-1, m - 1, m * n, w + 1], lambda p: (
            _pow(H(-1, m - 1, p), comb(w, 2) - 1)
            * _pow(H(-m * n, m - 1, p), w)
            * H(m * n * (m - 1), -(w + 1), p)))
    raise NoClosedFormError(f"no closed-form invariants for {fam!r}")


# -- recognition and the minimal idempotent ----------------------------------------

def _connected(a: np.ndarray) -> bool:
    n = a.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        nxt = (a[frontier].sum(axis=0) > 0) & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen.all())


def srg_parameters(A: AdjacencyMatrix) -> tuple[int, int, int, int]:
    """(b, a, c, d) of a connected non-complete SRG, verified exactly."""
    arr = A.array
    b = A.order
    deg = A.degrees()
    if b < 3 or not np.all(deg == deg[0]):
        raise SRGError("graph is not regular" if b >= 3 else "graph is too small")
    a = int(deg[0])
    if a == b - 1:
        raise SRGError("complete graph: only two distinct eigenvalues, not strongly regular")
    if not _connected(arr):
        raise SRGError("graph is disconnected")
    sq = arr @ arr
    off = ~np.eye(b, dtype=bool)
    adj_vals = np.unique(sq[(arr == 1) & off])
    non_vals = np.unique(sq[(arr == 0) & off])
    if len(adj_vals) > 1 or len(non_vals) != 1:
        raise SRGError("graph is not strongly regular: common-neighbour counts vary")
    c = int(adj_vals[0]) if len(adj_vals) else 0
    return b, a, c, int(non_vals[0])


def srg_recognize(A: AdjacencyMatrix) -> SpectralParams:
    return spectral_from_srg(*srg_parameters(A))


def idempotent_numerator(A: AdjacencyMatrix, sp: SpectralParams) -> tuple[np.ndarray, int]:
    """Integer matrix N and scalar D with E = N / D, checked exactly.

    N = b(A - rho I) - (a - rho) J and D = b (sigma - rho).
    """
    b, a, rho, sigma = sp.b, sp.a, sp.rho, sp.sigma
    if A.order != b or int(A.degrees()[0]) != a:
        raise SRGError("adjacency matrix does not match the spectral parameters")
    arr = A.array
    N = b * (arr - rho * np.eye(b, dtype=np.int64)) - (a - rho)
    D = b * (sigma - rho)
    # E^2 = E  <=>  N^2 = D N ;  A E = sigma E ;  trace E = g
    if not (np.array_equal(N @ N, D * N) and np.array_equal(arr @ N, sigma * N)
            and int(np.trace(N)) == D * sp.g):
        raise SRGError("adjacency matrix does not match the spectral parameters")
    return N, D


def minimal_idempotent(A: AdjacencyMatrix, sp: SpectralParams) -> SymMatrix:
    N, D = idempotent_numerator(A, sp)
    return SymMatrix(tuple(tuple(Fraction(int(x), D) for x in row) for row in N))


def invariants_of_block(E0: SymMatrix) -> GraphInvariants:
    diag = diagonalize(E0)
    delta = square_class(determinant(E0))
    primes = relevant_primes(list(diag.entries) + [delta.value])
    return GraphInvariants(delta, {p: hasse_of_diag(diag, p) for p in primes})


def graph_invariants_direct(A: AdjacencyMatrix,
                            sp: Optional[SpectralParams] = None) -> GraphInvariants:
    """delta and eps_p from a nonsingular g x g principal block of E."""
    if sp is None:
        sp = srg_recognize(A)
    N, D = idempotent_numerator(A, sp)
    S = select_independent_columns(N.tolist(), sp.g)
    E0 = SymMatrix(tuple(tuple(Fraction(int(N[i, j]), D) for j in S) for i in S))
    return invariants_of_block(E0)
