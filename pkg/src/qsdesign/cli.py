"""Command-line front end.

Exit codes: 0 feasible / not rejected, 1 infeasible / rejected / not an SRG,
2 usage error. Data goes to stdout, diagnostics to stderr. The default output
format can be set with QSDESIGN_FORMAT (json, csv or table).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .arith import DomainError, square_class
from .designs import (
    TableCaps,
    check_symplectic,
    enum_cotriangular,
    enum_multipartite,
    enum_steiner,
    family_corollary_or_none,
    family_feasibility,
    main_test,
    render,
    schutzenberger,
    chowla_ryser,
    symmetric_test,
    table1,
)
from .designs.families import search_symplectic, triangular_stream
from .designs.params import FIELDS, Condition, feasibility
from .graphio import FORMATS as GRAPH_FORMATS, ParseError, read_graph
from .hilbert import hilbert_symbol, legendre_eq_solvable, real_symbol, relevant_primes
from .srg import (
    Conference,
    CoTriangular,
    Multipartite,
    NoClosedFormError,
    NonIntegralSpectrumError,
    SpectralParams,
    SRGError,
    Steiner,
    Symplectic,
    Triangular,
    family_invariants,
    family_spectral,
    graph_invariants_direct,
    srg_recognize,
)

ENV_FORMAT = "QSDESIGN_FORMAT"
OUTPUT_FORMATS = ("json", "csv", "table")


class UsageError(Exception):
    pass


def _default_format() -> str:
    fmt = os.environ.get(ENV_FORMAT, "table")
    return fmt if fmt in OUTPUT_FORMATS else "table"


def _rational(text: str) -> Fraction:
    try:
        x = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")
    return x


# -- rendering -------------------------------------------------------------------

def _conditions_table(conds: Sequence[Condition]) -> list[str]:
    lines = []
    for c in conds:
        mark = "ok  " if c.passed else "FAIL"
        w = f"  [{c.witness}]" if c.witness not in (None, "") else ""
        lines.append(f"  {mark} {c.label}{w}")
    return lines


def render_report(query: str, verdict: str, conds: Sequence[Condition], params, fmt: str,
                  extra: Optional[dict] = None) -> str:
    params = list(params or [])
    if fmt == "json":
        obj = {
            "query": query,
            "verdict": verdict,
            "conditions": [c.as_dict() for c in conds],
            "parameters": [p.as_dict() for p in params],
        }
        if extra:
            obj.update(extra)
        return json.dumps(obj, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("label", "passed", "witness"))
        for c in conds:
            w.writerow((c.label, "true" if c.passed else "false", "" if c.witness is None else c.witness))
        if params:
            w.writerow(())
            w.writerow(FIELDS)
            for p in params:
                w.writerow(tuple(p.as_dict().values()))
        return buf.getvalue()
    lines = [f"query:   {query}", f"verdict: {verdict}"]
    if extra:
        for k, v in extra.items():
            lines.append(f"{k}: {v}")
    lines.append("conditions:")
    lines += _conditions_table(conds)
    for i, p in enumerate(params):
        lines.append(("design:  " if i == 0 else "complement: ") + str(p)
                     + f"  mu={p.mu} nu={p.nu}")
    return "\n".join(lines) + "\n"


# -- family arguments ------------------------------------------------------------------

def _family_from_args(args) -> Optional[object]:
    fam = getattr(args, "family", None)
    if fam is None:
        return None

    def need(*names):
        missing = [n for n in names if getattr(args, n, None) is None]
        if missing:
            raise UsageError(f"--family {fam} needs " + ", ".join("--" + n for n in missing))
        return [getattr(args, n) for n in names]

    try:
        if fam == "multipartite":
            return Multipartite(*need("m", "n"))
        if fam == "cotriangular":
            return CoTriangular(*need("n"))
        if fam == "symplectic":
            d, q = need("d", "q")
            return Symplectic(d, q)
        if fam == "steiner":
            n, m = need("n", "m")
            return Steiner(n, m)
        if fam == "triangular":
            return Triangular(*need("m"))
        if fam == "conference":
            return Conference(*need("q"))
    except DomainError as exc:
        raise UsageError(str(exc))
    raise UsageError(f"unknown family {fam}")


def _spectral_from_args(args) -> SpectralParams:
    vals = [args.rho, args.sigma, args.f, args.g]
    if any(v is None for v in vals):
        raise UsageError("give either --family ... or all of --rho --sigma --f --g")
    try:
        return SpectralParams(*vals)
    except DomainError as exc:
        raise UsageError(f"spectral parameters rejected: {exc}")


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=("multipartite", "cotriangular", "symplectic",
                                        "steiner", "triangular", "conference"))
    for name in ("m", "n", "d", "q", "rho", "sigma", "f", "g"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--graph", help="adjacency file supplying the block graph invariants")
    p.add_argument("--graph-format", choices=GRAPH_FORMATS, default="matrix")


# -- commands ---------------------------------------------------------------------------------

def _assess(args):
    """Feasibility plus every applicable sieve; returns (query, verdict, conditions, params, err)."""
    fam = _family_from_args(args)
    mu = args.mu
    if mu < 1:
        raise UsageError("--mu must be positive")
    inv = None
    if fam is not None:
        rep = family_feasibility(fam, mu)
        if isinstance(fam, Conference) and not rep.feasible:
            print("conference graphs never occur as block graphs (the divisibility "
                  "condition forces mu >= (q+1)/2, above the upper bound)", file=sys.stderr)
        if isinstance(fam, Symplectic) and fam.q > 2:
            rep.conditions += check_symplectic(fam.q, fam.d).conditions
        try:
            sp = family_spectral(fam)
        except NonIntegralSpectrumError:
            sp = None
        if sp is not None:
            try:
                inv = family_invariants(fam)
            except NoClosedFormError:
                inv = None
    else:
        sp = _spectral_from_args(args)
        rep = feasibility(sp, mu)
    if args.graph:
        try:
            A = read_graph(args.graph, args.graph_format)
            gsp = srg_recognize(A)
        except (ParseError, OSError) as exc:
            raise UsageError(f"cannot read graph: {exc}")
        if sp is not None and gsp != sp:
            raise UsageError(f"graph spectrum {gsp} does not match {sp}")
        sp = gsp
        inv = graph_invariants_direct(A, gsp)
    conds = list(rep.conditions)
    if rep.feasible and inv is not None and sp is not None:
        conds += main_test(sp, inv, mu).conditions
        if fam is not None and args.graph is None:
            cor = family_corollary_or_none(fam, mu)
            if cor is not None:
                conds += cor.conditions
    failed = [c for c in conds if not c.passed]
    if not rep.feasible:
        verdict = "infeasible"
    elif failed:
        verdict = "rejected"
    else:
        verdict = "feasible"
    return rep.query, verdict, conds, rep.params


def cmd_check(args) -> int:
    query, verdict, conds, params = _assess(args)
    sys.stdout.write(render_report(query, verdict, conds, params, args.format))
    return 0 if verdict == "feasible" else 1


def cmd_derive(args) -> int:
    fam = _family_from_args(args)
    rep = family_feasibility(fam, args.mu) if fam is not None else feasibility(_spectral_from_args(args), args.mu)
    sys.stdout.write(render_report(rep.query, rep.verdict, rep.conditions, rep.params, args.format))
    return 0 if rep.feasible else 1


def _sieve_rows(args):
    """(label, params, sieve conditions) triples for the chosen family."""
    fam = args.sieve_family
    if fam == "steiner":
        for m, pair in enum_steiner(args.n, args.mu, args.max_m):
            f = Steiner(args.n, m)
            res = main_test(family_spectral(f), family_invariants(f), args.mu)
            yield f"n={args.n} m={m} mu={args.mu}", pair, res.conditions
    elif fam == "multipartite":
        for qd, pair in enum_multipartite(args.max_alpha, args.max_lsum, args.max_t):
            f = Multipartite(qd.m, qd.n)
            res = main_test(family_spectral(f), family_invariants(f), qd.mu)
            conj = Condition("conjecture (unproven): alpha | t", qd.conjecture_holds)
            label = f"quadruple=({qd.alpha},{qd.l},{qd.lstar},{qd.t}) n={qd.n} m={qd.m} mu={qd.mu}"
            yield label, pair, list(res.conditions) + [conj]
    elif fam == "cotriangular":
        for l, ls, n, D in enum_cotriangular(args.mu, args.max_n):
            f = CoTriangular(n)
            res = main_test(family_spectral(f), family_invariants(f), args.mu)
            yield f"l={l} l*={ls} n={n} mu={args.mu}", (D,), res.conditions
    elif fam == "symplectic":
        for q, d, rep in search_symplectic(range(args.q_min, args.q_max + 1),
                                           range(args.d_min, args.d_max + 1)):
            yield f"q={q} d={d}", rep.params or (), rep.conditions
    elif fam == "triangular":
        for m, rep in triangular_stream(args.max_m, args.mu):
            yield f"m={m} mu={args.mu}", rep.params or (), rep.conditions


def cmd_sieve(args) -> int:
    if args.sieve_family in ("steiner", "cotriangular") and args.mu == 1 and \
            (getattr(args, "max_m", None) is None and getattr(args, "max_n", None) is None):
        raise UsageError("mu = 1 streams an infinite family; give a bound")
    rows = list(_sieve_rows(args))
    any_pass = False
    if args.format == "json":
        out = []
        for label, pair, conds in rows:
            ok = all(c.passed for c in conds if not c.label.startswith("conjecture"))
            any_pass |= ok
            out.append({"query": label, "verdict": "pass" if ok else "reject",
                        "conditions": [c.as_dict() for c in conds],
                        "parameters": [p.as_dict() for p in pair]})
        sys.stdout.write(json.dumps({"query": f"sieve {args.sieve_family}", "rows": out}, indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("query",) + FIELDS + ("verdict", "failed"))
        for label, pair, conds in rows:
            ok = all(c.passed for c in conds if not c.label.startswith("conjecture"))
            any_pass |= ok
            failed = ";".join(c.label for c in conds if not c.passed)
            vals = tuple(pair[0].as_dict().values()) if pair else ("",) * len(FIELDS)
            w.writerow((label,) + vals + ("pass" if ok else "reject", failed))
        sys.stdout.write(buf.getvalue())
    else:
        for label, pair, conds in rows:
            ok = all(c.passed for c in conds if not c.label.startswith("conjecture"))
            any_pass |= ok
            failed = ", ".join(f"{c.label}" + (f" [{c.witness}]" if c.witness else "")
                               for c in conds if not c.passed)
            design = str(pair[0]) if pair else "-"
            sys.stdout.write(f"{label}: {design}: {'pass' if ok else 'reject'}"
                             + (f" ({failed})" if failed else "") + "\n")
    return 0 if any_pass else 1


def cmd_table1(args) -> int:
    caps = TableCaps(max_n=args.max_n, max_mu=args.max_mu, max_v=args.max_v)
    sys.stdout.write(render(table1(caps), args.format))
    return 0


def cmd_symmetric(args) -> int:
    v, k, lam, nu = args.v, args.k, args.lam, args.nu
    if k is not None:
        try:
            verdict = symmetric_test(v, k, lam)
        except DomainError as exc:
            raise UsageError(str(exc))
        nu = k - lam
    else:
        if nu is None:
            raise UsageError("give --k, or --nu")
        verdict = schutzenberger(v, nu) if v % 2 == 0 else chowla_ryser(v, lam, nu)
    label = "1.1" if v % 2 == 0 else "1.2"
    witness = verdict.witness
    if verdict.failing_primes:
        witness = f"p={verdict.witness} (fails at p in {list(verdict.failing_primes)})"
    cond = Condition(f"{label} {verdict.rule}", not verdict.rejected, witness)
    query = f"symmetric v={v} k={k} lambda={lam} nu={nu}"
    sys.stdout.write(render_report(query, verdict.status, [cond], [], args.format))
    return 1 if verdict.rejected else 0


def cmd_graph(args) -> int:
    try:
        A = read_graph(args.path, args.graph_format)
    except (ParseError, OSError, ValueError) as exc:
        raise UsageError(f"cannot read graph: {exc}")
    try:
        sp = srg_recognize(A)
    except NonIntegralSpectrumError as exc:
        print(f"not supported: {exc}", file=sys.stderr)
        return 1
    except SRGError as exc:
        print(f"not strongly regular: {exc}", file=sys.stderr)
        return 1
    inv = graph_invariants_direct(A, sp)
    info = {
        "srg": dict(zip(("b", "a", "c", "d"), sp.srg_tuple())),
        "spectral": {"rho": sp.rho, "sigma": sp.sigma, "f": sp.f, "g": sp.g},
        "delta": inv.discriminant.value,
        "eps": {str(p): e for p, e in sorted(inv.hasse.items())},
    }
    if args.format == "json":
        sys.stdout.write(json.dumps({"query": f"graph {args.path}", **info}, indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("b", "a", "c", "d", "rho", "sigma", "f", "g", "delta", "prime", "eps"))
        for p, e in sorted(inv.hasse.items()):
            w.writerow(sp.srg_tuple() + (sp.rho, sp.sigma, sp.f, sp.g, inv.discriminant.value, p, e))
        sys.stdout.write(buf.getvalue())
    else:
        b, a, c, d = sp.srg_tuple()
        sys.stdout.write(
            f"strongly regular: srg({b},{a},{c},{d})\n"
            f"spectral: rho={sp.rho} sigma={sp.sigma} f={sp.f} g={sp.g}\n"
            f"delta: {inv.discriminant.value}\n"
            + "".join(f"eps_{p}: {e:+d}\n" for p, e in sorted(inv.hasse.items())))
    return 0


def cmd_hilbert(args) -> int:
    a, b = args.a, args.b
    if a == 0 or b == 0:
        raise UsageError("arguments must be nonzero")
    primes = [args.p] if args.p is not None else relevant_primes([a, b])
    try:
        symbols = {p: hilbert_symbol(a, b, p) for p in primes}
    except DomainError as exc:
        raise UsageError(str(exc))
    res = legendre_eq_solvable(a, b)
    conds = [Condition(f"({a},{b})_{p}", s == 1, None if s == 1 else f"p={p}") for p, s in symbols.items()]
    conds.append(Condition(f"({a},{b})_inf", real_symbol(a, b) == 1))
    query = f"hilbert {a} {b}" + (f" p={args.p}" if args.p is not None else "")
    verdict = "solvable" if res else "unsolvable"
    extra = {"square_classes": f"{square_class(a)} {square_class(b)}"}
    sys.stdout.write(render_report(query, verdict, conds, [], args.format,
                                   extra if args.format == "table" else None))
    return 0 if res else 1


# -- parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt_default = _default_format()
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=OUTPUT_FORMATS, default=fmt_default)

    ap = argparse.ArgumentParser(prog="qsdesign", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[parent], help="feasibility and nonexistence tests")
    _add_family_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive", parents=[parent], help="derive design parameters")
    _add_family_args(p)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("sieve", parents=[parent], help="enumerate and sieve a family")
    fams = p.add_subparsers(dest="sieve_family", required=True)
    s = fams.add_parser("steiner", parents=[parent])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mu", type=int, required=True)
    s.add_argument("--max-m", type=int)
    s = fams.add_parser("multipartite", parents=[parent])
    s.add_argument("--max-alpha", type=int, default=4)
    s.add_argument("--max-lsum", type=int, default=8)
    s.add_argument("--max-t", type=int, default=2)
    s = fams.add_parser("cotriangular", parents=[parent])
    s.add_argument("--mu", type=int, required=True)
    s.add_argument("--max-n", type=int)
    s = fams.add_parser("symplectic", parents=[parent])
    s.add_argument("--q-min", type=int, default=3)
    s.add_argument("--q-max", type=int, default=32)
    s.add_argument("--d-min", type=int, default=2)
    s.add_argument("--d-max", type=int, default=6)
    s = fams.add_parser("triangular", parents=[parent])
    s.add_argument("--mu", type=int, required=True)
    s.add_argument("--max-m", type=int, default=50)
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("table1", parents=[parent], help="small multi-Steiner parameters")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-mu", type=int, default=4)
    p.add_argument("--max-v", type=int)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("symmetric", parents=[parent], help="symmetric design tests")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--nu", type=int)
    p.set_defaults(func=cmd_symmetric)

    p = sub.add_parser("graph", parents=[parent], help="SRG recognition and invariants")
    p.add_argument("path")
    p.add_argument("--graph-format", choices=GRAPH_FORMATS, default="matrix")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("hilbert", parents=[parent], help="Hilbert symbols")
    p.add_argument("a", type=_rational)
    p.add_argument("b", type=_rational)
    p.add_argument("--p", type=int)
    p.set_defaults(func=cmd_hilbert)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "sieve_family", None) and not hasattr(args, "mu"):
        args.mu = None
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{ap.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
