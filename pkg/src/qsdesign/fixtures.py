"""Small named graphs, built explicitly. Used by tests and scripts.

Vertex orders are lexicographic in the natural labels so that the
generated files are reproducible.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from .arith import is_prime
from .graphio import AdjacencyMatrix


def _from_predicate(labels: Sequence, adjacent) -> AdjacencyMatrix:
    n = len(labels)
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            if adjacent(labels[i], labels[j]):
                a[i, j] = a[j, i] = 1
    return AdjacencyMatrix(a)


def path(n: int) -> AdjacencyMatrix:
    return AdjacencyMatrix.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(m: int, n: int) -> AdjacencyMatrix:
    """K_{m x n}; vertex (part, position)."""
    labels = list(itertools.product(range(m), range(n)))
    return _from_predicate(labels, lambda x, y: x[0] != y[0])


def octahedron() -> AdjacencyMatrix:
    return complete_multipartite(3, 2)


def triangular(n: int) -> AdjacencyMatrix:
    """T_n: 2-subsets of an n-set, adjacent when they meet."""
    labels = list(itertools.combinations(range(n), 2))
    return _from_predicate(labels, lambda x, y: bool(set(x) & set(y)))


def cotriangular(n: int) -> AdjacencyMatrix:
    """T_n*: 2-subsets, adjacent when disjoint."""
    labels = list(itertools.combinations(range(n), 2))
    return _from_predicate(labels, lambda x, y: not set(x) & set(y))


def petersen() -> AdjacencyMatrix:
    return cotriangular(5)


def symplectic(d: int) -> AdjacencyMatrix:
    """Sp(2d, 2): nonzero vectors of GF(2)^{2d}, adjacent when B(x, y) = 1."""
    labels = list(range(1, 2 ** (2 * d)))
    lo = (1 << d) - 1

    def form(x: int, y: int) -> int:
        return (bin((x & lo) & (y >> d)).count("1") + bin((x >> d) & (y & lo)).count("1")) & 1

    return _from_predicate(labels, lambda x, y: form(x, y) == 1)


def paley(q: int) -> AdjacencyMatrix:
    """Paley graph for a prime q = 1 mod 4."""
    if not is_prime(q) or q % 4 != 1:
        raise ValueError("paley fixture needs a prime q = 1 mod 4")
    squares = {x * x % q for x in range(1, q)}
    return _from_predicate(list(range(q)), lambda x, y: (x - y) % q in squares)


def paley9() -> AdjacencyMatrix:
    """Paley graph on GF(9) = GF(3)[i], i^2 = -1; isomorphic to the 3x3 rook graph."""
    labels = list(itertools.product(range(3), range(3)))
    return _from_predicate(labels, lambda x, y: x[0] == y[0] or x[1] == y[1])


def block_graph(blocks: Sequence[frozenset], size: int) -> AdjacencyMatrix:
    """Graph on blocks, adjacent when they meet in exactly ``size`` points."""
    return _from_predicate(list(blocks), lambda x, y: len(x & y) == size)


# -- point-line designs over prime fields -----------------------------------------

def _normalize(vec: tuple, q: int) -> tuple:
    lead = next(x for x in vec if x)
    inv = pow(lead, q - 2, q)
    return tuple(x * inv % q for x in vec)


def projective_lines(dim: int, q: int) -> list[frozenset]:
    """Lines of PG(dim, q), q prime, as sets of normalized points."""
    points = sorted({_normalize(v, q) for v in itertools.product(range(q), repeat=dim + 1) if any(v)})
    index = {p: i for i, p in enumerate(points)}
    lines = set()
    for x, y in itertools.combinations(points, 2):
        pts = {x, y}
        for s in range(1, q):
            pts.add(_normalize(tuple((a + s * b) % q for a, b in zip(x, y)), q))
        lines.add(frozenset(index[p] for p in pts))
    return sorted(lines, key=sorted)


def affine_lines(dim: int, q: int) -> list[frozenset]:
    """Lines of AG(dim, q), q prime."""
    points = list(itertools.product(range(q), repeat=dim))
    index = {p: i for i, p in enumerate(points)}
    lines = set()
    for x, y in itertools.combinations(points, 2):
        diff = tuple((b - a) % q for a, b in zip(x, y))
        lines.add(frozenset(index[tuple((a + s * t) % q for a, t in zip(x, diff))] for s in range(q)))
    return sorted(lines, key=sorted)


def projective_line_graph(dim: int, q: int) -> AdjacencyMatrix:
    """Block graph of points versus lines of PG(dim, q)."""
    return block_graph(projective_lines(dim, q), 1)


def affine_line_graph(dim: int, q: int) -> AdjacencyMatrix:
    """Block graph of points versus lines of AG(dim, q)."""
    return block_graph(affine_lines(dim, q), 1)


# -- the hyperoval Steiner design in PG(2, 8) -----------------------------------

def _gf8_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a & 8:
            a ^= 0b1011  # x^3 + x + 1
    return out


def _gf8_normalize(v: tuple) -> tuple:
    lead = next(x for x in v if x)
    inv = next(y for y in range(1, 8) if _gf8_mul(lead, y) == 1)
    return tuple(_gf8_mul(x, inv) for x in v)


def hyperoval_steiner_blocks() -> list[frozenset]:
    """2-(28, 4, 1) design: points are lines of PG(2,8) missing a hyperoval,
    blocks are the plane points off the hyperoval.
    """
    pts = sorted({_gf8_normalize(v) for v in itertools.product(range(8), repeat=3) if any(v)})

    def dot(u, v):
        return _gf8_mul(u[0], v[0]) ^ _gf8_mul(u[1], v[1]) ^ _gf8_mul(u[2], v[2])

    # conic xz = y^2 plus its nucleus, a hyperoval in characteristic 2
    conic = [p for p in pts if _gf8_mul(p[0], p[2]) == _gf8_mul(p[1], p[1])]
    oval = set(conic) | {(0, 1, 0)}
    assert len(oval) == 10
    external = [L for L in pts if not any(dot(L, p) == 0 for p in oval)]
    idx = {L: i for i, L in enumerate(external)}
    blocks = [frozenset(idx[L] for L in external if dot(L, p) == 0)
              for p in pts if p not in oval]
    return sorted(blocks, key=sorted)


def hyperoval_steiner_graph() -> AdjacencyMatrix:
    """A Steiner graph S_4(9) with the parameters of Sp(6, 2)."""
    return block_graph(hyperoval_steiner_blocks(), 1)


def named_fixtures() -> dict[str, AdjacencyMatrix]:
    return {
        "petersen": petersen(),
        "octahedron": octahedron(),
        "k3x3": complete_multipartite(3, 3),
        "t6": triangular(6),
        "sp4_2": symplectic(2),
        "ag2_3": affine_line_graph(2, 3),
        "pg3_2": projective_line_graph(3, 2),
        "path4": path(4),
    }


def write_fixture(A: AdjacencyMatrix, path, fmt: str = "matrix") -> None:
    from .graphio import format_graph6, format_matrix

    text = format_matrix(A) if fmt == "matrix" else format_graph6(A) + "\n"
    with open(path, "w") as fh:
        fh.write(text)


def iter_edges(A: AdjacencyMatrix) -> Iterable[tuple[int, int]]:
    n = A.order
    for i in range(n):
        for j in range(i + 1, n):
            if A.array[i, j]:
                yield i, j
