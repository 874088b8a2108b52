"""Adjacency-matrix ingestion: plain 0/1 matrix text and graph6."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np

FORMATS = ("matrix", "graph6")


class ParseError(ValueError):
    def __init__(self, msg: str, line: Optional[int] = None, col: Optional[int] = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "") + ": "
        super().__init__(where + msg)
        self.line = line
        self.col = col


@dataclass(frozen=True, eq=False)
class AdjacencyMatrix:
    """Symmetric 0/1 matrix with zero diagonal, stored as a read-only int64 array."""

    array: np.ndarray

    def __post_init__(self):
        a = np.array(self.array, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ParseError("adjacency matrix must be square")
        if not np.isin(a, (0, 1)).all():
            i, j = map(int, np.argwhere(~np.isin(a, (0, 1)))[0])
            raise ParseError(f"entry {a[i, j]} is not 0/1", i + 1, j + 1)
        if np.any(np.diag(a)):
            i = int(np.flatnonzero(np.diag(a))[0])
            raise ParseError("nonzero diagonal entry", i + 1, i + 1)
        if not np.array_equal(a, a.T):
            i, j = map(int, np.argwhere(a != a.T)[0])
            raise ParseError("matrix is not symmetric", i + 1, j + 1)
        a.setflags(write=False)
        object.__setattr__(self, "array", a)

    @property
    def order(self) -> int:
        return self.array.shape[0]

    def degrees(self) -> np.ndarray:
        return self.array.sum(axis=1)

    def __eq__(self, other) -> bool:
        return isinstance(other, AdjacencyMatrix) and np.array_equal(self.array, other.array)

    def __hash__(self):
        return hash(self.array.tobytes())

    @classmethod
    def from_edges(cls, n: int, edges) -> "AdjacencyMatrix":
        a = np.zeros((n, n), dtype=np.int64)
        for i, j in edges:
            a[i, j] = a[j, i] = 1
        return cls(a)


# -- plain matrix format ----------------------------------------------------

def parse_matrix(text: str) -> AdjacencyMatrix:
    rows: list[list[int]] = []
    linenos: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        row = []
        col = 0
        for tok in line.split():
            col = raw.index(tok, col) + 1
            if tok not in ("0", "1"):
                raise ParseError(f"entry {tok!r} is not 0/1", lineno, col)
            row.append(int(tok))
            col += len(tok) - 1
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"ragged row: {len(row)} entries, expected {len(rows[0])}", lineno)
        rows.append(row)
        linenos.append(lineno)
    if not rows:
        raise ParseError("empty matrix")
    n = len(rows)
    if len(rows[0]) != n:
        raise ParseError(f"{n} rows but {len(rows[0])} columns", linenos[0])
    for i in range(n):
        if rows[i][i]:
            raise ParseError("nonzero diagonal entry", linenos[i], i + 1)
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise ParseError(f"asymmetric entry at ({i + 1}, {j + 1})", linenos[i], j + 1)
    return AdjacencyMatrix(np.array(rows, dtype=np.int64))


def format_matrix(A: AdjacencyMatrix) -> str:
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in A.array)


# -- graph6 ------------------------------------------------------------------

def _g6_size(data: bytes) -> tuple[int, int]:
    """Decode N(n); return (n, number of header bytes)."""
    if not data:
        raise ParseError("empty graph6 string", 1, 1)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        chunk, off = data[2:8], 2
    else:
        chunk, off = data[1:4], 1
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, off + len(chunk)


def parse_graph6(text: str) -> AdjacencyMatrix:
    line = text.strip().splitlines()[0] if text.strip() else ""
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    data = line.encode("ascii")
    for pos, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c} outside the graph6 range", 1, pos + 1)
    n, off = _g6_size(data)
    nbits = n * (n - 1) // 2
    body = data[off:]
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, got {len(body)}", 1, off + 1)
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    a = np.zeros((n, n), dtype=np.int64)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                a[i, j] = a[j, i] = 1
            k += 1
    return AdjacencyMatrix(a)


def format_graph6(A: AdjacencyMatrix) -> str:
    n = A.order
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [int(A.array[i, j]) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


def parse_graph(text: str, fmt: str = "matrix") -> AdjacencyMatrix:
    if fmt == "matrix":
        return parse_matrix(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown graph format {fmt!r}; expected one of {FORMATS}")


def read_graph(path: Union[str, Path], fmt: str = "matrix") -> AdjacencyMatrix:
    return parse_graph(Path(path).read_text(), fmt)
