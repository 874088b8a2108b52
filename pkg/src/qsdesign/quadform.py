"""Exact symmetric rational matrices and their rational-equivalence invariants.

Everything here is exact; matrices are stored as tuples of Fraction rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .arith import DomainError, RationalLike, SquareClass, as_rational, square_class
from .hilbert import hilbert_symbol, local_data, relevant_primes, symbol_from_local


class SingularMatrixError(ValueError):
    """A matrix (or a required principal block) has zero determinant."""


class RankError(ValueError):
    def __init__(self, achieved: int, wanted: int):
        super().__init__(f"rank {achieved} is below the requested {wanted}")
        self.achieved = achieved
        self.wanted = wanted


Rows = tuple[tuple[Fraction, ...], ...]


def _to_rows(entries: Iterable[Iterable]) -> Rows:
    return tuple(tuple(as_rational(x) for x in row) for row in entries)


@dataclass(frozen=True)
class SymMatrix:
    rows: Rows

    def __post_init__(self):
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise DomainError("matrix is not square")
            for j in range(i):
                if row[j] != self.rows[j][i]:
                    raise DomainError(f"matrix is not symmetric at ({i}, {j})")

    @classmethod
    def from_rows(cls, entries) -> "SymMatrix":
        if hasattr(entries, "tolist"):
            entries = entries.tolist()
        return cls(_to_rows(entries))

    @classmethod
    def identity(cls, n: int) -> "SymMatrix":
        return cls.aIbJ(1, 0, n)

    @classmethod
    def aIbJ(cls, a: RationalLike, b: RationalLike, n: int) -> "SymMatrix":
        a, b = as_rational(a), as_rational(b)
        return cls(tuple(tuple(a + b if i == j else b for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence[RationalLike]) -> "SymMatrix":
        n = len(entries)
        zero = Fraction(0)
        return cls(tuple(tuple(as_rational(entries[i]) if i == j else zero for j in range(n))
                         for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def principal(self, idx: Sequence[int]) -> "SymMatrix":
        return SymMatrix(tuple(tuple(self.rows[i][j] for j in idx) for i in idx))

    def congruent(self, X: Sequence[Sequence[RationalLike]]) -> "SymMatrix":
        """X' A X for a square rational matrix X."""
        X = _to_rows(X)
        n = self.n
        AX = [[sum(self.rows[i][k] * X[k][j] for k in range(n)) for j in range(n)]
              for i in range(n)]
        return SymMatrix(tuple(tuple(sum(X[k][i] * AX[k][j] for k in range(n))
                                     for j in range(n)) for i in range(n)))

    def permuted(self, perm: Sequence[int]) -> "SymMatrix":
        return self.principal(list(perm))

    def direct_sum(self, other: "SymMatrix") -> "SymMatrix":
        n, m = self.n, other.n
        zero = Fraction(0)
        top = tuple(row + (zero,) * m for row in self.rows)
        bot = tuple((zero,) * n + row for row in other.rows)
        return SymMatrix(top + bot)


@dataclass(frozen=True)
class DiagForm:
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if any(d == 0 for d in self.entries):
            raise DomainError("diagonal form entries must be nonzero")

    @property
    def n(self) -> int:
        return len(self.entries)

    def determinant(self) -> Fraction:
        out = Fraction(1)
        for d in self.entries:
            out *= d
        return out

    def signature(self) -> tuple[int, int]:
        pos = sum(1 for d in self.entries if d > 0)
        return pos, self.n - pos


# -- determinants -------------------------------------------------------------

def _bareiss(M: list[list[int]]) -> int:
    n = len(M)
    if n == 0:
        return 1
    M = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            Mi, Mk = M[i], M[k]
            mik = Mi[k]
            for j in range(k + 1, n):
                Mi[j] = (Mi[j] * pivot - mik * Mk[j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def determinant(A) -> Fraction:
    """Exact determinant via Bareiss on a common-denominator integer lift."""
    rows = A.rows if isinstance(A, SymMatrix) else _to_rows(A)
    n = len(rows)
    L = 1
    for row in rows:
        for x in row:
            L = L * x.denominator // math.gcd(L, x.denominator)
    M = [[int(x * L) for x in row] for row in rows]
    return Fraction(_bareiss(M), L**n)


# -- diagonalization ----------------------------------------------------------

def diagonalize(A: SymMatrix) -> DiagForm:
    """Congruence-diagonalize a nonsingular symmetric matrix."""
    if determinant(A) == 0:
        raise SingularMatrixError("cannot diagonalize a singular matrix")
    M = [list(row) for row in A.rows]
    n = len(M)
    out = []
    active = list(range(n))
    while active:
        piv = next((i for i in active if M[i][i] != 0), None)
        if piv is None:
            # all diagonal entries zero: fold a column with a nonzero off-diagonal entry in
            i = active[0]
            j = next(j for j in active if M[i][j] != 0)
            for k in range(n):
                M[i][k] += M[j][k]
            for k in range(n):
                M[k][i] += M[k][j]
            piv = i
        d = M[piv][piv]
        out.append(d)
        active.remove(piv)
        row = M[piv]
        for i in active:
            c = M[i][piv]
            if c == 0:
                continue
            c = c / d
            Mi = M[i]
            for j in active:
                if row[j]:
                    Mi[j] -= c * row[j]
    return DiagForm(tuple(out))


# -- Hasse invariants ---------------------------------------------------------

def hasse_of_diag(D: DiagForm | Sequence[RationalLike], p: int) -> int:
    """Product over i < j of (d_i, d_j)_p."""
    entries = D.entries if isinstance(D, DiagForm) else tuple(as_rational(x) for x in D)
    # bilinearity: prod_{i<j} (d_i, d_j) = prod_j (d_1 ... d_{j-1}, d_j)
    out = 1
    prefix = SquareClass(1, 1)
    for k, d in enumerate(entries):
        if k:
            out *= symbol_from_local(local_data(prefix.value, p), local_data(d, p), p)
        prefix = prefix * square_class(d)
    return out


def hasse_invariant(A: SymMatrix, p: int) -> int:
    return hasse_of_diag(diagonalize(A), p)


def hasse_aIbJ(a: RationalLike, b: RationalLike, n: int, p: int) -> int:
    """Closed-form Hasse invariant of a I_n + b J_n."""
    a, b = as_rational(a), as_rational(b)
    if n < 1:
        raise DomainError("n must be positive")
    c = a + b * n
    if a == 0 or c == 0:
        raise SingularMatrixError("a I + b J is singular")
    out = 1
    if comb(n - 1, 2) % 2:
        out *= hilbert_symbol(-1, a, p)
    if (n - 1) % 2:
        out *= hilbert_symbol(a, c, p)
    out *= hilbert_symbol(a * c, n, p)
    return out


def hasse_schur_combine(eB: int, eAB: int, detB, detAB, p: int) -> int:
    detB = detB.value if isinstance(detB, SquareClass) else detB
    detAB = detAB.value if isinstance(detAB, SquareClass) else detAB
    return eB * eAB * hilbert_symbol(detB, detAB, p)


def schur_complement(A: SymMatrix, S: Sequence[int]) -> SymMatrix:
    """A/B = D - C' B^{-1} C with B = A[S, S]."""
    S = list(S)
    T = [i for i in range(A.n) if i not in set(S)]
    B = [[A[i, j] for j in S] for i in S]
    C = [[A[i, j] for j in T] for i in S]
    X = _solve(B, C, S)
    rows = []
    for a, i in enumerate(T):
        rows.append(tuple(A[i, j] - sum(C[k][a] * X[k][b] for k in range(len(S)))
                          for b, j in enumerate(T)))
    return SymMatrix(tuple(rows))


def _solve(B: list[list[Fraction]], C: list[list[Fraction]], S) -> list[list[Fraction]]:
    """Solve B X = C by Gauss-Jordan; B square."""
    n = len(B)
    m = len(C[0]) if C else 0
    aug = [B[i][:] + C[i][:] for i in range(n)]
    for k in range(n):
        piv = next((r for r in range(k, n) if aug[r][k] != 0), None)
        if piv is None:
            raise SingularMatrixError(f"principal block on indices {list(S)} is singular")
        aug[k], aug[piv] = aug[piv], aug[k]
        inv = 1 / aug[k][k]
        aug[k] = [x * inv for x in aug[k]]
        for r in range(n):
            if r != k and aug[r][k] != 0:
                f = aug[r][k]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[k])]
    return [row[n:n + m] for row in aug]


# -- invariant tuple ------------------------------------------------------------

@dataclass(frozen=True)
class EquivInvariants:
    """Rank, signature, discriminant class and Hasse values.

    ``hasse`` lists the primes where the value was computed; it is +1 at
    every other prime. Rank, signature, discriminant and Hasse values
    together decide rational equivalence.
    """

    rank: int
    signature: tuple[int, int]
    discriminant: SquareClass
    hasse: Mapping[int, int] = field(default_factory=dict)

    def hasse_at(self, p: int) -> int:
        if p in self.hasse:
            return self.hasse[p]
        if p == 2 or self.discriminant.squarefree % p == 0:
            raise KeyError(f"prime {p} was not recorded")
        return 1

    def primes(self) -> list[int]:
        return sorted(self.hasse)

    def matches(self, other: "EquivInvariants") -> bool:
        if (self.rank, self.signature, self.discriminant) != (
                other.rank, other.signature, other.discriminant):
            return False
        for p in set(self.hasse) | set(other.hasse):
            if self.hasse.get(p, 1) != other.hasse.get(p, 1):
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, EquivInvariants):
            return NotImplemented
        return self.matches(other)

    def __hash__(self):
        return hash((self.rank, self.signature, self.discriminant,
                     tuple(sorted((p, v) for p, v in self.hasse.items() if v != 1))))


def invariants_of_diag(D: DiagForm) -> EquivInvariants:
    primes = relevant_primes(D.entries) if D.entries else [2]
    det = D.determinant()
    return EquivInvariants(
        rank=D.n,
        signature=D.signature(),
        discriminant=square_class(det) if D.entries else SquareClass(1, 1),
        hasse={p: hasse_of_diag(D, p) for p in primes},
    )


def equivalence_invariants(A: SymMatrix) -> EquivInvariants:
    return invariants_of_diag(diagonalize(A))


def select_independent_columns(M, g: int) -> tuple[int, ...]:
    """Greedy left-to-right choice of g linearly independent columns."""
    rows = M.rows if isinstance(M, SymMatrix) else _to_rows(M.tolist() if hasattr(M, "tolist") else M)
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    basis: list[tuple[int, list[Fraction]]] = []  # (pivot row, reduced vector)
    chosen: list[int] = []
    for j in range(ncols):
        if len(chosen) == g:
            break
        vec = [rows[i][j] for i in range(nrows)]
        for piv, b in basis:
            if vec[piv] != 0:
                c = vec[piv] / b[piv]
                vec = [x - c * y for x, y in zip(vec, b)]
        piv = next((i for i, x in enumerate(vec) if x != 0), None)
        if piv is not None:
            basis.append((piv, vec))
            chosen.append(j)
    if len(chosen) < g:
        raise RankError(len(chosen), g)
    return tuple(chosen)
