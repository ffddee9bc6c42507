"""Claim-suite runner, corpus scanner and open-question search."""
from __future__ import annotations

import json
import logging
import math
import os
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import cached_property
from importlib import resources
from itertools import combinations
from multiprocessing import Pool
from typing import Any, Iterable, Iterator

from . import bounds as bd
from .families import FamilyError, FamilySpec, make_family
from .graph import CapacityError, Graph, GraphError, degree_profile, from_graph6, girth, is_connected, to_graph6
from .solvers import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    HypothesisError,
    bondage_number,
    domination_number,
    independence_number,
)
from .surfaces import is_planar, kn_genus

log = logging.getLogger(__name__)

SUITE_SCHEMA = "bondage-claims/1"
REPORT_SCHEMA = "bondage-report/1"
SCAN_SCHEMA = "bondage-scan/1"
CHECKS = ("chain", "ore", "gamma-le-beta", "sanchis", "order-bound", "planar-Bprime-8", "conjecture")


class SchemaError(ValueError):
    """Malformed claim suite."""


# --------------------------------------------------------------------------
# labelled enumeration


def enumerate_small_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Every labelled graph on ``n <= 6`` vertices, once each.

    Graph number ``k`` has edge ``pairs[i]`` iff bit ``i`` of ``k`` is set,
    ``pairs`` being the vertex pairs in lexicographic order.
    """
    if n > 6:
        raise CapacityError("exhaustive enumeration is limited to n <= 6; sample instead")
    if n < 1:
        raise ValueError("n must be positive")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = Graph(n, tuple(rows))
        if not connected_only or is_connected(g):
            yield g


# --------------------------------------------------------------------------
# per-graph facts, computed lazily


class GraphFacts:
    def __init__(self, g: Graph, budget: int = DEFAULT_BUDGET):
        self.g = g
        self.budget = budget

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def profile(self):
        return degree_profile(self.g)

    @cached_property
    def gamma(self) -> int:
        return domination_number(self.g)[0]

    @cached_property
    def beta0(self) -> int:
        return independence_number(self.g)[0]

    @cached_property
    def degree_bounds(self) -> bd.DegreeBounds:
        return bd.degree_based_bounds(self.g)

    @cached_property
    def bondage(self) -> int | None:
        """Exact bondage number, or ``None`` when the budget runs out."""
        try:
            return bondage_number(self.g, budget=self.budget).value
        except BudgetExceededError:
            return None

    @cached_property
    def planar(self) -> bool:
        return is_planar(self.g)

    @cached_property
    def girth(self) -> float:
        return girth(self.g)


# Each check returns "pass", "fail", "skip" (hypothesis not met) or
# "undecided" (exact bondage out of budget).


def _check_chain(f: GraphFacts, chi: int | None) -> str:
    if not f.connected or f.g.n < 2:
        return "skip"
    b = f.bondage
    if b is None:
        return "undecided"
    db = f.degree_bounds
    ok = b <= db.B <= db.Bprime <= db.b1 <= 2 * f.profile.ad - 1
    return "pass" if ok else "fail"


def _check_ore(f: GraphFacts, chi: int | None) -> str:
    if not f.connected or f.g.n < 2:
        return "skip"
    return "pass" if 2 * f.gamma <= f.g.n else "fail"


def _check_gamma_beta(f: GraphFacts, chi: int | None) -> str:
    return "pass" if f.gamma <= f.beta0 else "fail"


def _check_sanchis(f: GraphFacts, chi: int | None) -> str:
    n = f.g.n
    if not f.connected or not 3 <= f.gamma <= n / 2:
        return "skip"
    return "pass" if f.g.m <= bd.sanchis_edge_max(n, f.gamma) else "fail"


def _surface_chi(f: GraphFacts, chi: int | None) -> int | None:
    if chi is not None:
        return chi
    if f.g.n <= 64 and f.planar:
        return 2
    return None


def _check_order(f: GraphFacts, chi: int | None) -> str:
    n = f.g.n
    if not f.connected or n < 2:
        return "skip"
    c = _surface_chi(f, chi)
    if c is None:
        return "skip"
    ok = n >= bd.order_lower_bound(f.gamma, c, n) - bd.EPS
    if f.gamma != 2:
        ok = ok and f.gamma <= bd.gamma_upper_bound(n, c) + bd.EPS
    return "pass" if ok else "fail"


def _check_planar_bprime(f: GraphFacts, chi: int | None) -> str:
    # B' <= 8 for planar graphs; B' <= 2*5 - 3 when no vertex has degree 5
    if not f.connected or f.g.m == 0 or f.g.n > 64 or not f.planar:
        return "skip"
    bp = f.degree_bounds.Bprime
    ok = bp <= 8 and (bool(f.profile.V(5)) or bp <= 7)
    return "pass" if ok else "fail"


def _check_conjecture(f: GraphFacts, chi: int | None) -> str:
    if not f.connected or f.g.n < 2:
        return "skip"
    b = f.bondage
    if b is None:
        return "undecided"
    return "pass" if 2 * b <= 3 * f.profile.Delta else "fail"


_CHECK_FUNCS = {
    "chain": _check_chain,
    "ore": _check_ore,
    "gamma-le-beta": _check_gamma_beta,
    "sanchis": _check_sanchis,
    "order-bound": _check_order,
    "planar-Bprime-8": _check_planar_bprime,
    "conjecture": _check_conjecture,
}


def check_graph(g: Graph, checks: Iterable[str], chi: int | None = None, budget: int = DEFAULT_BUDGET) -> dict[str, str]:
    f = GraphFacts(g, budget)
    return {name: _CHECK_FUNCS[name](f, chi) for name in checks}


# --------------------------------------------------------------------------
# corpus scan


@dataclass
class CheckTally:
    name: str
    checked: int = 0
    skipped: int = 0
    undecided: int = 0
    violations: list[str] = field(default_factory=list)


@dataclass
class ScanReport:
    corpus_id: str
    graphs_scanned: int
    decode_failures: int
    checks: list[CheckTally]
    chi_source: str

    @property
    def total_violations(self) -> int:
        return sum(len(c.violations) for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {"schema": SCAN_SCHEMA, **asdict(self)}


def _scan_task(args):
    g6, checks, chi, budget = args
    return check_graph(from_graph6(g6), checks, chi, budget)


def default_jobs() -> int:
    return os.cpu_count() or 1


def corpus_scan(
    corpus: Iterable[str | Graph],
    checks: Iterable[str],
    chi: int | None = None,
    jobs: int | None = 1,
    budget: int = DEFAULT_BUDGET,
    corpus_id: str = "corpus",
) -> ScanReport:
    """Run ``checks`` over a stream of graph6 strings (or graphs).

    Violations are listed in input order whatever ``jobs`` is.  Lines that
    fail to decode are skipped and counted.
    """
    checks = list(checks)
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise SchemaError(f"unknown checks {sorted(unknown)}; registered: {CHECKS}")
    items: list[str] = []
    failures = 0
    for item in corpus:
        if isinstance(item, Graph):
            items.append(to_graph6(item))
            continue
        try:
            items.append(to_graph6(from_graph6(item)))
        except GraphError as exc:
            failures += 1
            log.warning("skipping undecodable graph %r: %s", item, exc)
    tasks = [(g6, checks, chi, budget) for g6 in items]
    jobs = jobs or default_jobs()
    if jobs > 1 and len(tasks) > 1:
        with Pool(jobs) as pool:
            results = list(pool.imap(_scan_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        results = [_scan_task(t) for t in tasks]
    tallies = {name: CheckTally(name) for name in checks}
    for g6, res in zip(items, results):
        for name, status in res.items():
            t = tallies[name]
            if status == "skip":
                t.skipped += 1
            elif status == "undecided":
                t.undecided += 1
            else:
                t.checked += 1
                if status == "fail":
                    t.violations.append(g6)
    if chi is not None:
        source = f"chi={chi} user-asserted for every graph"
    else:
        source = "chi=2 where the planarity test succeeds; surface-dependent checks skipped otherwise"
    return ScanReport(corpus_id, len(items), failures, list(tallies.values()), source)


def enumeration_corpus(n_min: int, n_max: int, connected_only: bool) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_small_graphs(n, connected_only)


# --------------------------------------------------------------------------
# open questions


QUESTIONS: dict[str, dict[str, Any]] = {
    "q1": {"surface": "N1", "chi": 1, "targets": [7, 8],
           "text": "Is there a projective-planar graph G with b(G) in {7, 8}?"},
    "q2-torus": {"surface": "S1", "chi": 0, "targets": [8, 9],
                 "text": "Is there a toroidal graph G with b(G) in {8, 9}?"},
    "q2-klein": {"surface": "N2", "chi": 0, "targets": [8, 9],
                 "text": "Is there a Klein bottle graph G with b(G) in {8, 9}?"},
    "q3": {"surface": "N3", "chi": -1, "targets": [8, 9, 10],
           "text": "Is there a graph G embeddable in N3 with b(G) in {8, 9, 10}?"},
    "q4": {"surface": "N4 or S2", "chi": -2, "targets": [9, 10, 11, 12],
           "text": "Is there a graph G embeddable in N4 or S2 with b(G) in {9, ..., 12}?"},
}


@dataclass
class SearchEntry:
    graph6: str
    status: str  # "exact", "bound-only" or "skipped-hypothesis"
    value: int | None
    Bprime: int | None
    runtime_ms: int


@dataclass
class SearchFindings:
    question: str
    text: str
    surface: str
    chi_assertion: str
    targets: list[int]
    entries: list[SearchEntry]
    max_bondage: int | None
    achieving: list[str]
    hits: list[str]
    statement: str

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def counterexample_search(
    corpus: Iterable[str | Graph],
    question: str,
    chi: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> SearchFindings:
    """Exact bondage numbers over a corpus the caller certifies for the
    surface of ``question``.  Reports the largest value found; it can
    exhibit an example but never settles the question negatively."""
    if question not in QUESTIONS:
        raise SchemaError(f"unknown question {question!r}; expected one of {sorted(QUESTIONS)}")
    q = QUESTIONS[question]
    entries = []
    for item in corpus:
        g = item if isinstance(item, Graph) else from_graph6(item)
        g6 = to_graph6(g)
        t0 = time.perf_counter()
        if g.n < 2 or not is_connected(g):
            entries.append(SearchEntry(g6, "skipped-hypothesis", None, None, 0))
            continue
        bp = bd.degree_based_bounds(g).Bprime
        try:
            value, status = bondage_number(g, budget=budget).value, "exact"
        except BudgetExceededError:
            value, status = None, "bound-only"
        ms = int((time.perf_counter() - t0) * 1000)
        entries.append(SearchEntry(g6, status, value, bp, ms))
    exact = [e for e in entries if e.status == "exact"]
    best = max((e.value for e in exact), default=None)
    achieving = [e.graph6 for e in exact if e.value == best]
    hits = [e.graph6 for e in exact if e.value in q["targets"]]
    if hits:
        statement = f"{len(hits)} corpus graph(s) reach a target value, valid if the surface certification holds."
    else:
        statement = "No target value found. The question remains open: a finite corpus cannot answer it negatively."
    assertion = f"chi={chi} asserted by caller" if chi is not None else f"{q['surface']} asserted by caller"
    return SearchFindings(question, q["text"], q["surface"], assertion, q["targets"], entries, best, achieving, hits, statement)


# --------------------------------------------------------------------------
# claim suites


@dataclass
class ClaimResult:
    claim_id: str
    subject: Any
    expected: Any
    computed: Any
    status: str  # "pass", "fail", "skipped-hypothesis"
    provenance: str
    runtime_ms: int
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def _subject_graph(subject: dict[str, Any]):
    if "graph6" in subject:
        return from_graph6(subject["graph6"]), None
    fg = make_family(FamilySpec.from_dict(subject))
    return fg.graph, fg


def _num(x):
    if isinstance(x, Fraction):
        return float(x) if x.denominator != 1 else int(x)
    if isinstance(x, float) and x == math.inf:
        return "inf"
    return x


def _quantity(name: str, g: Graph, fg, claim: dict[str, Any]):
    chi = claim.get("chi")
    if chi is None and fg is not None and fg.embedding is not None:
        chi = fg.embedding.chi
    f = GraphFacts(g, claim.get("budget", DEFAULT_BUDGET))
    simple = {
        "n": lambda: g.n,
        "m": lambda: g.m,
        "gamma": lambda: f.gamma,
        "beta0": lambda: f.beta0,
        "delta": lambda: f.profile.delta,
        "Delta": lambda: f.profile.Delta,
        "ad": lambda: f.profile.ad,
        "girth": lambda: f.girth,
        "connected": lambda: f.connected,
        "planar": lambda: f.planar,
    }
    if name in simple:
        return simple[name]()
    if name in ("b1", "b2", "b3", "B", "Bprime"):
        return getattr(f.degree_bounds, name)
    if name == "bondage":
        return bondage_number(g, cap=claim.get("cap"), budget=f.budget, method=claim.get("method", "auto")).value
    if name.startswith("samczech_"):
        r = bd.samczech_check(g)
        return {"samczech_equality": r.equality, "samczech_p3": r.p3, "samczech_p4": r.p4,
                "samczech_holds": r.holds, "samczech_consistent": r.consistent}[name]
    if name == "faces":
        return None if fg is None else fg.faces
    if name == "chi":
        if chi is None:
            raise HypothesisError("no Euler characteristic known for this subject")
        return chi
    if name == "euler":
        if chi is None or fg is None or fg.faces is None:
            raise HypothesisError("face count or chi unknown")
        return g.n - g.m + fg.faces - chi
    if name in ("order_gap", "gamma_gap"):
        if chi is None:
            raise HypothesisError("no Euler characteristic known for this subject")
        if name == "order_gap":
            return g.n - bd.order_lower_bound(f.gamma, chi, g.n)
        return bd.gamma_upper_bound(g.n, chi) - f.gamma
    if name == "sanchis_gap":
        return bd.sanchis_edge_max(g.n, f.gamma) - g.m
    raise SchemaError(f"unknown quantity {name!r}")


def _dominance_violations(chi_range, gamma_range) -> int:
    bad = 0
    for chi in range(chi_range[0], chi_range[1] + 1):
        gz = bd.gz11_bound(chi)
        for gamma in range(gamma_range[0], gamma_range[1] + 1):
            parities = ("even", "odd") if gamma == 2 else (None,)
            for par in parities:
                if bd.domination_chi_bounds(gamma, chi, 3, par)[1] > gz + bd.EPS:
                    bad += 1
    return bad


_FORMULAS = {
    "constant_bound": lambda a: bd.constant_bound(a["chi"], a.get("table")),
    "gz11_bound": lambda a: bd.gz11_bound(a["chi"]),
    "delta_max": lambda a: bd.delta_max(a["chi"]),
    "sanchis_edge_max": lambda a: bd.sanchis_edge_max(a["n"], a["gamma"]),
    "order_lower_bound": lambda a: bd.order_lower_bound(a["gamma"], a["chi"], a.get("n_parity")),
    "gamma_upper_bound": lambda a: bd.gamma_upper_bound(a["n"], a["chi"]),
    "teschner_bound": lambda a: bd.teschner_bound(a["gamma"], a["Delta"], a.get("t")),
    "dom_bondage": lambda a: bd.domination_chi_bounds(a["gamma"], a["chi"], a.get("g", 3), a.get("n_parity"))[1],
    "dom_ad": lambda a: bd.domination_chi_bounds(a["gamma"], a["chi"], a.get("g", 3), a.get("n_parity"))[0],
    "kn_genus_h": lambda a: kn_genus(a["n"])[0],
    "kn_genus_q": lambda a: kn_genus(a["n"])[1],
}


def _compare(computed, expected, op: str, tol: float) -> bool:
    if isinstance(expected, bool) or isinstance(computed, bool):
        return op == "eq" and computed == expected
    if op == "eq":
        return abs(computed - expected) <= tol
    if op == "le":
        return computed <= expected + tol
    if op == "ge":
        return computed >= expected - tol
    raise SchemaError(f"unknown comparison {op!r}")


def _corpus_from_spec(spec: dict[str, Any]):
    if "enumerate" in spec:
        e = spec["enumerate"]
        return enumeration_corpus(e.get("n_min", 1), e["n_max"], e.get("connected", False)), \
            f"labelled n={e.get('n_min', 1)}..{e['n_max']}" + (" connected" if e.get("connected") else "")
    if "graph6" in spec:
        return list(spec["graph6"]), "inline graph6 list"
    raise SchemaError("corpus needs 'enumerate' or 'graph6'")


def run_claim(claim: dict[str, Any], jobs: int | None = 1) -> ClaimResult:
    for key in ("id", "kind"):
        if key not in claim:
            raise SchemaError(f"claim missing {key!r}: {claim}")
    kind = claim["kind"]
    op = claim.get("op", "eq")
    tol = float(claim.get("tolerance", 0))
    prov = claim.get("provenance", "derived")
    subject = claim.get("subject")
    expected = claim.get("expected")
    note = claim.get("note", "")
    t0 = time.perf_counter()
    status = None
    computed: Any = None
    try:
        if kind == "invariant":
            g, fg = _subject_graph(subject)
            computed = _quantity(claim["quantity"], g, fg, claim)
        elif kind == "formula":
            fn = claim["function"]
            if fn not in _FORMULAS:
                raise SchemaError(f"unknown formula {fn!r}")
            computed = _FORMULAS[fn](claim.get("args", {}))
        elif kind == "scan":
            corpus, cid = _corpus_from_spec(claim["corpus"])
            rep = corpus_scan(corpus, claim["checks"], claim.get("chi"), jobs=jobs,
                              budget=claim.get("budget", DEFAULT_BUDGET), corpus_id=cid)
            computed = rep.total_violations
            undecided = sum(c.undecided for c in rep.checks)
            subject = {"corpus": cid, "graphs": rep.graphs_scanned}
            note = (note + f" checked={[c.checked for c in rep.checks]}; undecided={undecided}").strip()
            if undecided:
                status = "fail"
                note += " (exact bondage out of budget)"
        elif kind == "dominance":
            computed = _dominance_violations(claim["chi_range"], claim["gamma_range"])
        else:
            raise SchemaError(f"unknown claim kind {kind!r}")
    except (HypothesisError, bd.InapplicableError) as exc:
        status, note = "skipped-hypothesis", str(exc)
    except (KeyError, TypeError, FamilyError) as exc:
        raise SchemaError(f"claim {claim['id']!r} is malformed: {exc}") from exc
    if status is None:
        status = "pass" if _compare(computed, expected, op, tol) else "fail"
    ms = int((time.perf_counter() - t0) * 1000)
    return ClaimResult(claim["id"], subject, expected, _num(computed), status, prov, ms, note)


def run_claim_suite(suite: dict[str, Any], jobs: int | None = 1) -> list[ClaimResult]:
    if suite.get("schema") != SUITE_SCHEMA:
        raise SchemaError(f"suite schema must be {SUITE_SCHEMA!r}")
    claims = suite.get("claims")
    if not isinstance(claims, list):
        raise SchemaError("suite needs a 'claims' list")
    return [run_claim(c, jobs) for c in claims]


def suite_report(results: list[ClaimResult], suite_id: str = "") -> dict[str, Any]:
    counts = {s: sum(r.status == s for r in results) for s in ("pass", "fail", "skipped-hypothesis")}
    return {"schema": REPORT_SCHEMA, "suite": suite_id, "summary": counts,
            "results": [r.to_dict() for r in results]}


def load_default_suite() -> dict[str, Any]:
    text = resources.files("bondage").joinpath("data/default_suite.json").read_text(encoding="utf-8")
    return json.loads(text)
