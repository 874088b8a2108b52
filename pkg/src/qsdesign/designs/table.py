"""Small feasible multi-Steiner parameters, with the sieve verdict."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional

from .families import enum_steiner
from .params import DesignParams
from .sieve import cor_4_7

COLUMNS = ("number", "n", "m", "v", "k", "lambda", "lambda1", "lambda2", "verdict")


@dataclass(frozen=True)
class TableCaps:
    max_n: int = 6
    max_mu: int = 4
    min_mu: int = 2
    max_v: Optional[int] = None


@dataclass(frozen=True)
class TableRow:
    number: int
    n: int
    m: int
    params: DesignParams
    rejected: bool
    witness: Optional[str] = None

    @property
    def verdict(self) -> str:
        return "no" if self.rejected else ""

    def cells(self) -> tuple:
        p = self.params
        return (self.number, self.n, self.m, p.v, p.k, p.lam, p.lam1, p.lam2, self.verdict)


def table1(caps: TableCaps = TableCaps()) -> list[TableRow]:
    """Canonical members of feasible pairs, ordered by (n, m), with Steiner sieve verdicts."""
    found: dict[tuple[int, int], list[DesignParams]] = {}
    for n in range(2, caps.max_n + 1):
        for mu in range(caps.min_mu, caps.max_mu + 1):
            for m, (small, _big) in enum_steiner(n, mu):
                if caps.max_v is not None and small.v > caps.max_v:
                    continue
                found.setdefault((n, m), []).append(small)
    rows = []
    for (n, m) in sorted(found):
        for p in sorted(found[(n, m)], key=lambda d: d.mu):
            res = cor_4_7(n, m, p.mu)
            bad = res.first_failure()
            rows.append(TableRow(len(rows) + 1, n, m, p, not res.passed,
                                 f"{bad.label}: {bad.witness}" if bad else None))
    return rows


def render(rows: list[TableRow], fmt: str = "table") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in rows:
            w.writerow(r.cells())
        return buf.getvalue()
    if fmt == "json":
        out = [dict(zip(COLUMNS, r.cells()), mu=r.params.mu, witness=r.witness) for r in rows]
        return json.dumps({"query": "table1", "rows": out}, indent=2) + "\n"
    head = ("#", "n", "m", "v", "k", "lambda", "lambda1", "lambda2", "exists?")
    body = [tuple(str(c) for c in r.cells()) for r in rows]
    widths = [max(len(x) for x in col) for col in zip(head, *body)]
    lines = ["  ".join(x.rjust(wd) for x, wd in zip(line, widths)).rstrip()
             for line in [head] + body]
    return "\n".join(lines) + "\n"
