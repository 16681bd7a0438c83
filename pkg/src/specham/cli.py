"""Command-line front end.

Exit codes: 0 success, 2 unparsable input, 3 failed precondition,
4 a stated result is contradicted (counterexample, failing chain or bracket),
5 a search budget ran out.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import charpoly, extremal, scan
from .codec import EdgeListError, Graph6Error, emit_edgelist, emit_graph6, parse_graph
from .graph import GraphError, connectivity
from .hamilton import BUDGET_ENV, default_budget, hamilton
from .spectral import DEFAULT_TOL, spectral_report
from .structure import (NotClawFreeError, SearchBudgetError, closure, is_claw_free,
                        is_spanning_subgraph)
from .theorems import GraphFacts, check, parse_theorem

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_CONTRADICTION, EXIT_BUDGET = 0, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# -- formatting -------------------------------------------------------------------


def _fixed(obj):
    """Round every float to 12 significant digits so output is byte-stable."""
    if isinstance(obj, float):
        if math.isfinite(obj):
            return float(f"{obj:.12g}")
        return str(obj)
    if isinstance(obj, dict):
        return {k: _fixed(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_fixed(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalars
        return _fixed(obj.item())
    return obj


def _cell(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    if v is None:
        return ""
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(_fixed(v), separators=(",", ":"))
    return str(v)


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_fixed(rows), indent=2) + "\n"
    cols: list[str] = []
    for r in rows:
        cols.extend(k for k in r if k not in cols)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r.get(c)) for c in cols])
        return buf.getvalue()
    if fmt == "md":
        lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
        for r in rows:
            lines.append("| " + " | ".join(_cell(r.get(c)) for c in cols) + " |")
        return "\n".join(lines) + "\n"
    raise CliError(EXIT_PARSE, f"unknown format {fmt!r}")


def _write(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- argument helpers -------------------------------------------------------------


def parse_range(text: str) -> list[int]:
    """``"a..b"`` (inclusive), ``"a"``, or a comma list of either."""
    out: list[int] = []
    try:
        for part in text.split(","):
            lo, sep, hi = part.strip().partition("..")
            if sep:
                a, b = int(lo), int(hi)
                if b < a:
                    raise ValueError
                out.extend(range(a, b + 1))
            else:
                out.append(int(lo))
    except ValueError:
        raise CliError(EXIT_PARSE, f"bad range {text!r}; expected a..b") from None
    return out


def expand_specs(text: str) -> list[str]:
    """``"ep:10..12"`` -> ``["ep:10", "ep:11", "ep:12"]``; other specs pass through."""
    head, sep, tail = text.partition(":")
    if sep and ".." in tail and head.strip().lower() in ("en", "ep", "ep'"):
        return [f"{head}:{n}" for n in parse_range(tail)]
    return [text]


def _build(spec: str):
    try:
        return extremal.ExtremalSpec.parse(spec).build()
    except extremal.SpecParseError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    except ValueError as exc:
        raise CliError(EXIT_PARSE if isinstance(exc, GraphError) else EXIT_PRECONDITION,
                       str(exc)) from None


def _read(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return parse_graph(text)
    except (Graph6Error, EdgeListError, GraphError) as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None


def _inputs(args) -> list[tuple[str, object]]:
    graphs = []
    for spec in args.spec or []:
        for s in expand_specs(spec):
            graphs.append((s, _build(s)))
    for path in args.input or []:
        graphs.append((path, _read(path)))
    if not graphs:
        raise CliError(EXIT_PARSE, "no input graph: give --spec or --in")
    return graphs


def _theorem(text: str):
    try:
        return parse_theorem(text)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None


# -- subcommands ------------------------------------------------------------------


def cmd_build(args) -> int:
    g = _build(args.spec)
    text = emit_graph6(g) + "\n" if args.format == "graph6" else emit_edgelist(g)
    _write(text, args.out)
    return EXIT_OK


def cmd_report(args) -> int:
    rows = []
    for name, g in _inputs(args):
        if g.n < 1:
            raise CliError(EXIT_PRECONDITION, f"{name}: spectral report needs n >= 1")
        rows.append({"graph": name, **spectral_report(g, args.tol).to_dict()})
    _write(render(rows, args.format), args.out)
    return EXIT_OK


def cmd_closure(args) -> int:
    (name, g), = _inputs(args)
    try:
        cl, trace = closure(g)
    except NotClawFreeError as exc:
        raise CliError(EXIT_PRECONDITION, f"{name}: {exc}") from None
    if args.out:
        Path(args.out).write_text(emit_graph6(cl) + "\n")
    payload = {"graph": name, "closure": emit_graph6(cl), **trace.to_dict()}
    _write(render([payload], "json"), args.trace)
    return EXIT_OK


def cmd_hamilton(args) -> int:
    rows, code = [], EXIT_OK
    for name, g in _inputs(args):
        try:
            res = hamilton(g, args.kind, args.budget)
        except ValueError as exc:
            raise CliError(EXIT_PRECONDITION, f"{name}: {exc}") from None
        rows.append({"graph": name, "n": g.n, **res.to_dict()})
        if res.status == "budget_exceeded":
            code = EXIT_BUDGET
    _write(render(rows, args.format), args.out)
    return code


def cmd_verify(args) -> int:
    ids = [_theorem(t) for t in args.id]
    rows, code = [], EXIT_OK
    for name, g in _inputs(args):
        facts = GraphFacts(g, args.budget)
        for tid, k in ids:
            v = check(facts, tid, tol=args.tol, k=k, full=args.full)
            rows.append({"graph": name, **v.to_dict()})
            if v.status == "counterexample":
                code = EXIT_CONTRADICTION
            elif v.status == "unresolved" and code == EXIT_OK:
                code = EXIT_BUDGET
    _write(render(rows, args.format), args.out)
    return code


def cmd_scan(args) -> int:
    tid, k = _theorem(args.id)
    if args.random:
        sizes = parse_range(args.n)
        if min(sizes) < 4:
            raise CliError(EXIT_PRECONDITION, "random scans need n >= 4")
        reports = [scan.random_scan(tid, sizes, args.random, args.seed, args.mode,
                                    tol=args.tol, k=k, budget=args.budget)]
    else:
        reports = []
        for n in parse_range(args.n):
            if not 1 <= n <= scan.MAX_EXHAUSTIVE_N:
                raise CliError(EXIT_PRECONDITION,
                               f"exhaustive scans need 1 <= n <= {scan.MAX_EXHAUSTIVE_N}")
            reports.append(scan.exhaustive_scan(n, tid, args.filter, tol=args.tol, k=k))
    _write(render([r.to_dict() for r in reports], args.format), args.out)
    if any(r.counterexamples for r in reports):
        return EXIT_CONTRADICTION
    return EXIT_BUDGET if any(r.unresolved for r in reports) else EXIT_OK


_TABLE_KINDS = {"adjacency": "pass_adjacency", "q_index": "pass_q_index",
                "complement": "pass_complement"}


def cmd_table(args) -> int:
    sizes = parse_range(args.n)
    if min(sizes) < 10:
        raise CliError(EXIT_PRECONDITION, "the comparison table starts at n = 10")
    kinds = list(_TABLE_KINDS) if args.kind == "all" else [args.kind]
    rows = [charpoly.comparison_row(n, args.margin, args.tol) for n in sizes]
    _write(render(rows, args.format), args.out)
    failed = any(not r[_TABLE_KINDS[k]] for r in rows for k in kinds)
    return EXIT_CONTRADICTION if failed else EXIT_OK


def cmd_brackets(args) -> int:
    kinds = list(charpoly.BRACKET_PAIRS) if args.kind == "all" else [args.kind]
    reports = []
    for kind in kinds:
        sizes = (parse_range(args.n) if args.n
                 else range(charpoly.BRACKET_THRESHOLDS[kind], args.upto + 1))
        for n in sizes:
            if n < 10:
                raise CliError(EXIT_PRECONDITION, "bracket polynomials are stated for n >= 10")
            reports.append(charpoly.bracket_check(kind, n, args.reading))
    if args.format == "csv":
        _write(charpoly.brackets_to_csv(reports), args.out)
    else:
        _write(render([r.to_dict() for r in reports], args.format), args.out)
    failed = any(r.claimed and not r.passed for r in reports)
    return EXIT_CONTRADICTION if failed else EXIT_OK


def cmd_polys(args) -> int:
    rows, failed = [], False
    for n in parse_range(args.n):
        if n < 10:
            raise CliError(EXIT_PRECONDITION, "the polynomials are stated for n >= 10")
        for fam in charpoly.PolyFamily:
            lam = charpoly.full_lambda_max(fam, n, args.tol)
            res = charpoly.residual_check(fam, n, lam, args.reading)
            row = res.to_dict()
            report = charpoly.compare_with_quotient(fam, n, args.reading)
            row["typo"] = report.describe() if report else ""
            row["class_degrees"] = charpoly.quotient_matrix(fam.variant, fam.kind, n).degrees
            rows.append(row)
            failed |= not res.passed
    _write(render(rows, args.format), args.out)
    return EXIT_CONTRADICTION if failed else EXIT_OK


def cmd_family(args) -> int:
    rows = []
    for n in parse_range(args.n):
        if n < 9:
            raise CliError(EXIT_PRECONDITION, "the EP family needs n >= 9")
        ep, epp = extremal.build_ep(n, "standard"), extremal.build_ep(n, "prime")
        for i, m in enumerate(extremal.ep_family_members(n)):
            g = m.graph
            conn = connectivity(g)
            row = {
                "spec": f"family:{n}/{i}",
                "base": ",".join(str(x) for x in m.base),
                "triangle": list(m.triangle),
                "n": g.n,
                "e": g.edge_count,
                "claw_free": is_claw_free(g),
                "two_connected": conn.is_two_connected,
                "inside_ep": is_spanning_subgraph(g, ep),
                "inside_ep_prime": is_spanning_subgraph(g, epp),
                "graph6": emit_graph6(g),
            }
            if n <= args.hamilton_upto:
                res = hamilton(g, "cycle", args.budget)
                row["hamilton_cycle"] = res.status
            rows.append(row)
    _write(render(rows, args.format), args.out)
    return EXIT_OK


# -- parser -----------------------------------------------------------------------


def _budget(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="specham",
                                description="Spectral Hamiltonicity toolkit for claw-free graphs.")
    sub = p.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("json", "csv", "md"), default="json")

    def graph_inputs(sp):
        sp.add_argument("--spec", action="append", help="extremal spec, e.g. ep:20 or en:10..14")
        sp.add_argument("--in", dest="input", action="append",
                        help="graph6 or edge-list file ('-' for stdin)")

    sp = sub.add_parser("build", help="construct a named graph and write it")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--out")
    sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("report", help="spectral report")
    graph_inputs(sp)
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.add_argument("--format", **fmt)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("closure", help="claw-free closure with its trace")
    graph_inputs(sp)
    sp.add_argument("--out", help="file for the closed graph (graph6)")
    sp.add_argument("--trace", help="file for the JSON trace (default stdout)")
    sp.set_defaults(func=cmd_closure)

    sp = sub.add_parser("hamilton", help="Hamilton cycle / path decision")
    graph_inputs(sp)
    sp.add_argument("--kind", choices=("cycle", "path"), default="cycle")
    sp.add_argument("--budget", type=_budget, default=None,
                    help=f"node budget (default ${BUDGET_ENV} or {default_budget()})")
    sp.add_argument("--format", **fmt)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_hamilton)

    sp = sub.add_parser("verify", help="evaluate theorems on graphs")
    graph_inputs(sp)
    sp.add_argument("--id", action="append", required=True,
                    help="theorem id, e.g. FiNi_trace, ham-mu, L_eG(4)")
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--full", action="store_true", help="evaluate conclusions even if vacuous")
    sp.add_argument("--budget", type=_budget, default=None)
    sp.add_argument("--format", **fmt)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="exhaustive (n <= 7) or random theorem scan")
    sp.add_argument("--n", required=True)
    sp.add_argument("--id", required=True)
    sp.add_argument("--filter", choices=scan.FILTERS, default="all")
    sp.add_argument("--random", type=int, default=0, metavar="COUNT",
                    help="check COUNT random claw-free graphs instead of enumerating")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mode", choices=("line_graph", "closure_perturbed"), default="line_graph")
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--budget", type=_budget, default=None)
    sp.add_argument("--format", **fmt)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("table", help="the three eigenvalue chains over an n-range")
    sp.add_argument("--kind", choices=("all", *_TABLE_KINDS), default="all")
    sp.add_argument("--n", default="10..60")
    sp.add_argument("--margin", type=float, default=charpoly.TABLE_MARGIN)
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.add_argument("--format", **fmt)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("brackets", help="sign checks of the polynomials at s and t")
    sp.add_argument("--kind", choices=("all", *charpoly.BRACKET_PAIRS), default="all")
    sp.add_argument("--n", help="n-range (default: each kind's threshold up to --upto)")
    sp.add_argument("--upto", type=int, default=200)
    sp.add_argument("--reading", choices=charpoly.READINGS, default="printed")
    sp.add_argument("--format", **fmt)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_brackets)

    sp = sub.add_parser("polys", help="residuals of the closed-form polynomials")
    sp.add_argument("--n", default="10..40")
    sp.add_argument("--reading", choices=charpoly.READINGS, default="printed")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.add_argument("--format", **fmt)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_polys)

    sp = sub.add_parser("family", help="list the EP family members")
    sp.add_argument("--n", required=True)
    sp.add_argument("--hamilton-upto", type=int, default=16,
                    help="run the Hamilton cycle search for n up to this value")
    sp.add_argument("--budget", type=_budget, default=None)
    sp.add_argument("--format", **fmt)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_family)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad arguments
    try:
        return args.func(args)
    except CliError as exc:
        print(f"specham: {exc}", file=sys.stderr)
        return exc.code
    except SearchBudgetError as exc:
        print(f"specham: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"specham: {exc}", file=sys.stderr)
        return EXIT_PARSE

