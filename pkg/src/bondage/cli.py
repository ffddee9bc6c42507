"""Command-line entry point: ``bondage <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import bounds as bd
from . import harness as hs
from .families import FamilySpec, make_family, parse_family_params
from .graph import FORMATS, degree_profile, girth, is_connected, parse_graph, read_graph6_lines, serialize_graph
from .solvers import (
    DEFAULT_BUDGET,
    BoundViolatedError,
    BudgetExceededError,
    bondage_number,
    domination_number,
    independence_number,
)
from .surfaces import PLANARITY_MAX_ORDER, is_planar, parse_surface

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else float(x)
    if isinstance(x, float) and math.isinf(x):
        return None
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _dump(obj: Any, report: str | None = None) -> None:
    text = json.dumps(_jsonable(obj), indent=2, sort_keys=False)
    if report:
        with open(report, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _load_graph(args):
    if getattr(args, "graph", None):
        return parse_graph(args.graph, args.format), None
    if getattr(args, "family", None):
        spec = FamilySpec(args.family, parse_family_params(args.params or ""))
        fg = make_family(spec)
        return fg.graph, fg
    return parse_graph(_read_text(args.in_file), args.format), None


def _chi(args, g=None, fg=None) -> tuple[int | None, str]:
    if args.chi is not None and args.surface:
        raise UsageError("give --chi or --surface, not both")
    if args.chi is not None:
        return args.chi, "user-asserted"
    if args.surface:
        return parse_surface(args.surface).chi, "user-asserted"
    if fg is not None and fg.embedding is not None:
        return fg.embedding.chi, fg.embedding.certified
    return None, "none"


def _corpus(args) -> list[str]:
    return [line for _, line in read_graph6_lines(_read_text(args.in_file))]


# --------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    if not args.family:
        raise UsageError("gen needs --family")
    g, fg = _load_graph(args)
    sys.stdout.write(serialize_graph(g, args.format).rstrip("\n") + "\n")
    if fg.embedding is not None:
        logging.getLogger("bondage").info("surface %s (%s)", fg.embedding.name, fg.embedding.certified)
    return EXIT_OK


def cmd_invariants(args) -> int:
    g, _ = _load_graph(args)
    prof = degree_profile(g)
    out: dict[str, Any] = {
        "n": g.n, "m": g.m, "delta": prof.delta, "Delta": prof.Delta, "ad": prof.ad,
        "connected": is_connected(g), "girth": girth(g),
    }
    if g.n:
        out["gamma"] = domination_number(g)[0]
        out["beta0"] = independence_number(g)[0]
    if g.n <= PLANARITY_MAX_ORDER:
        out["planar"] = is_planar(g)
    if g.m:
        db = bd.degree_based_bounds(g)
        out.update(b1=db.b1, b2=db.b2, b3=db.b3, B=db.B, Bprime=db.Bprime)
    _dump(out, args.report)
    return EXIT_OK


def cmd_bounds(args) -> int:
    g, fg = _load_graph(args)
    chi, cert = _chi(args, g, fg)
    if chi is None and g.n <= PLANARITY_MAX_ORDER and is_planar(g):
        chi, cert = 2, "by-planarity-test"
    _dump(bd.bounds_report(g, chi, cert).to_dict(), args.report)
    return EXIT_OK


def cmd_bondage(args) -> int:
    g, _ = _load_graph(args)
    try:
        r = bondage_number(g, cap=args.cap, budget=args.budget, method=args.method)
    except BudgetExceededError as exc:
        _dump({"status": "bound-only", "Bprime": bd.degree_based_bounds(g).Bprime,
               "calls": exc.calls, "note": str(exc)}, args.report)
        return EXIT_OK
    except BoundViolatedError as exc:
        _dump({"status": "cap-exceeded", "cap": args.cap, "note": str(exc)}, args.report)
        return EXIT_FAIL
    _dump({"status": "exact", "bondage": r.value, "witness": [list(e) for e in r.witness], "gamma": r.gamma,
           "cap": r.cap_used, "method": r.method, "calls": r.calls}, args.report)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite:
        try:
            suite = json.loads(_read_text(args.suite))
        except json.JSONDecodeError as exc:
            raise hs.SchemaError(f"suite is not valid JSON: {exc}") from exc
    else:
        suite = hs.load_default_suite()
    results = hs.run_claim_suite(suite, jobs=args.jobs)
    for r in results:
        print(f"{r.status.upper():<19} {r.claim_id}  expected={r.expected} computed={r.computed}  ({r.runtime_ms} ms)")
    rep = hs.suite_report(results, suite.get("id", ""))
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(rep, fh, indent=2)
            fh.write("\n")
    s = rep["summary"]
    print(f"{s['pass']} pass, {s['fail']} fail, {s['skipped-hypothesis']} skipped")
    return EXIT_FAIL if s["fail"] else EXIT_OK


def cmd_scan(args) -> int:
    chi, _ = _chi(args)
    checks = args.checks.split(",") if args.checks else list(hs.CHECKS)
    if args.enumerate:
        corpus, cid = hs.enumeration_corpus(1, args.enumerate, True), f"connected labelled n<={args.enumerate}"
    else:
        corpus, cid = _corpus(args), args.in_file or "stdin"
    rep = hs.corpus_scan(corpus, checks, chi, jobs=args.jobs, budget=args.budget, corpus_id=cid)
    _dump(rep.to_dict(), args.report)
    return EXIT_FAIL if rep.total_violations else EXIT_OK


def cmd_search(args) -> int:
    chi, _ = _chi(args)
    findings = hs.counterexample_search(_corpus(args), args.question, chi, budget=args.budget)
    _dump(findings.to_dict(), args.report)
    return EXIT_OK


def cmd_table(args) -> int:
    print("table,chi,bound")
    for chi in range(-2, -24, -1):
        print(f"1,{chi},{bd.constant_bound(chi, 1)}")
    for chi in sorted(bd.TABLE2, reverse=True):
        print(f"2,{chi},{bd.constant_bound(chi, 2)}")
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bondage", description="Bondage numbers and surface bounds.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    def graph_opts(sp, family=True):
        sp.add_argument("--in", dest="in_file", metavar="FILE", help="input file ('-' for stdin)")
        sp.add_argument("--graph", metavar="TEXT", help="graph given inline")
        sp.add_argument("--format", choices=FORMATS, default="graph6")
        if family:
            sp.add_argument("--family", metavar="NAME")
            sp.add_argument("--params", metavar="K=V,...")
        sp.add_argument("--report", metavar="FILE", help="also write the JSON output here")

    def chi_opts(sp):
        sp.add_argument("--chi", type=int)
        sp.add_argument("--surface", metavar="S<h>|N<q>")

    sp = sub.add_parser("gen", help="generate a family member")
    sp.add_argument("--family", metavar="NAME")
    sp.add_argument("--params", metavar="K=V,...")
    sp.add_argument("--format", choices=FORMATS, default="graph6")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("invariants", help="basic invariants and degree bounds")
    graph_opts(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("bounds", help="every applicable bound")
    graph_opts(sp)
    chi_opts(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("bondage", help="exact bondage number with witness")
    graph_opts(sp)
    sp.add_argument("--cap", type=int)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--method", choices=("auto", "cover", "enumerate"), default="auto")
    sp.set_defaults(func=cmd_bondage)

    sp = sub.add_parser("verify", help="run a claim suite (default: the shipped one)")
    sp.add_argument("--suite", metavar="FILE")
    sp.add_argument("--report", metavar="FILE")
    sp.add_argument("--jobs", type=int, default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="property checks over a graph6 corpus")
    sp.add_argument("--in", dest="in_file", metavar="FILE")
    sp.add_argument("--enumerate", type=int, metavar="N", help="all connected labelled graphs on <= N vertices")
    sp.add_argument("--checks", metavar="A,B,...")
    chi_opts(sp)
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--report", metavar="FILE")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("search", help="largest bondage numbers for an open question")
    sp.add_argument("--question", required=True, choices=sorted(hs.QUESTIONS))
    sp.add_argument("--in", dest="in_file", metavar="FILE")
    chi_opts(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--report", metavar="FILE")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("table", help="print the constant-bound tables as CSV")
    sp.set_defaults(func=cmd_table)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
