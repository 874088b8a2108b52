import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import assume, given, strategies as st

from qsdesign.arith import SquareClass, square_class
from qsdesign.quadform import (
    DiagForm,
    RankError,
    SingularMatrixError,
    SymMatrix,
    determinant,
    diagonalize,
    equivalence_invariants,
    hasse_aIbJ,
    hasse_invariant,
    hasse_of_diag,
    hasse_schur_combine,
    schur_complement,
    select_independent_columns,
)

PRIMES = [2, 3, 5, 7, 11, 13]


@st.composite
def sym_matrices(draw, max_n=6, lo=-6, hi=6):
    n = draw(st.integers(1, max_n))
    vals = draw(st.lists(st.integers(lo, hi), min_size=n * n, max_size=n * n))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = Fraction(vals[i * n + j], 1 + (i + j) % 2)
    return SymMatrix.from_rows(rows)


def nonsingular(A):
    return determinant(A) != 0


def unimodular(n, rnd):
    X = np.eye(n, dtype=object)
    for _ in range(3 * n):
        i, j = rnd.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            X[:, i] *= -1
        else:
            X[:, j] += rnd.randint(-2, 2) * X[:, i]
    return X.tolist()


def test_symmatrix_validation():
    with pytest.raises(ValueError):
        SymMatrix.from_rows([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        SymMatrix.from_rows([[1, 2]])
    with pytest.raises(ValueError):
        DiagForm((Fraction(1), Fraction(0)))


@given(sym_matrices())
def test_determinant_matches_sympy(A):
    assert determinant(A) == sympy.Matrix(A.rows).det()


def test_determinant_examples():
    assert determinant(SymMatrix.aIbJ(1, 1, 3)) == 4
    assert determinant([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)


@given(sym_matrices())
def test_diagonalize_preserves_det_class_and_signature(A):
    assume(nonsingular(A))
    D = diagonalize(A)
    assert square_class(D.determinant()) == square_class(determinant(A))
    evs = np.linalg.eigvalsh(np.array(A.rows, dtype=float))
    assert D.signature() == (int((evs > 0).sum()), int((evs < 0).sum()))


def test_diagonalize_needs_pivot_repair():
    D = diagonalize(SymMatrix.from_rows([[0, 1], [1, 0]]))
    assert D.signature() == (1, 1)
    with pytest.raises(SingularMatrixError):
        diagonalize(SymMatrix.from_rows([[1, 1], [1, 1]]))


def test_hasse_of_diag_examples():
    assert hasse_of_diag([-1, -1], 2) == -1
    assert hasse_of_diag([5], 5) == 1
    assert hasse_of_diag([], 3) == 1
    # pairwise definition
    ds = [3, -2, 5, 6]
    for p in PRIMES:
        from qsdesign.hilbert import hilbert_symbol
        direct = 1
        for i, j in itertools.combinations(range(len(ds)), 2):
            direct *= hilbert_symbol(ds[i], ds[j], p)
        assert hasse_of_diag(ds, p) == direct


@given(sym_matrices(max_n=5), st.randoms(use_true_random=False))
def test_congruence_invariance(A, rnd):
    assume(nonsingular(A))
    X = unimodular(A.n, rnd)
    assert equivalence_invariants(A.congruent(X)) == equivalence_invariants(A)


@given(sym_matrices(), st.randoms(use_true_random=False))
def test_pivot_order_independence(A, rnd):
    assume(nonsingular(A))
    perm = list(range(A.n))
    rnd.shuffle(perm)
    assert equivalence_invariants(A.permuted(perm)) == equivalence_invariants(A)


def test_hasse_aIbJ_grid():
    for a in range(-3, 4):
        for b in range(-3, 4):
            for n in range(1, 9):
                if a == 0 or a + b * n == 0:
                    continue
                M = SymMatrix.aIbJ(a, b, n)
                for p in PRIMES:
                    assert hasse_aIbJ(a, b, n, p) == hasse_invariant(M, p), (a, b, n, p)


@given(sym_matrices(max_n=8), st.data())
def test_schur_identities(A, data):
    assume(nonsingular(A) and A.n >= 2)
    k = data.draw(st.integers(1, A.n - 1))
    S = list(range(k))
    B = A.principal(S)
    assume(nonsingular(B))
    AB = schur_complement(A, S)
    assert determinant(A) == determinant(B) * determinant(AB)
    for p in PRIMES:
        assert hasse_invariant(A, p) == hasse_schur_combine(
            hasse_invariant(B, p), hasse_invariant(AB, p),
            square_class(determinant(B)), square_class(determinant(AB)), p)


def test_equivalence_examples():
    inv = equivalence_invariants(SymMatrix.identity(3))
    assert (inv.rank, inv.signature, inv.discriminant) == (3, (3, 0), SquareClass(1, 1))
    assert all(v == 1 for v in inv.hasse.values())
    assert equivalence_invariants(SymMatrix.diagonal([1, -1])) == \
        equivalence_invariants(SymMatrix.from_rows([[0, 1], [1, 0]]))
    assert equivalence_invariants(SymMatrix.diagonal([1, 1])) == \
        equivalence_invariants(SymMatrix.diagonal([2, 2]))
    assert equivalence_invariants(SymMatrix.diagonal([1, 1])) != \
        equivalence_invariants(SymMatrix.diagonal([3, 3]))


def test_select_independent_columns():
    assert select_independent_columns(SymMatrix.identity(4), 4) == (0, 1, 2, 3)
    assert select_independent_columns(SymMatrix.aIbJ(0, Fraction(1, 5), 5), 1) == (0,)
    # E of K_{3x2}: (1/2) J_2 (x) (I_3 - J_3/3), vertex = (part, position)
    J2 = np.full((2, 2), Fraction(1, 2), dtype=object)
    P = np.eye(3, dtype=object) - np.full((3, 3), Fraction(1, 3), dtype=object)
    E = SymMatrix.from_rows(np.kron(P, J2))
    S = select_independent_columns(E, 2)
    assert determinant(E.principal(S)) != 0
    with pytest.raises(RankError):
        select_independent_columns(E, 3)


def test_randomized_direct_sum_hasse():
    rnd = random.Random(3)
    for _ in range(50):
        a = [rnd.choice([-1, 1]) * rnd.randint(1, 30) for _ in range(3)]
        b = [rnd.choice([-1, 1]) * rnd.randint(1, 30) for _ in range(2)]
        A, B = SymMatrix.diagonal(a), SymMatrix.diagonal(b)
        for p in PRIMES:
            assert hasse_invariant(A.direct_sum(B), p) == hasse_schur_combine(
                hasse_invariant(A, p), hasse_invariant(B, p),
                determinant(A), determinant(B), p)
