"""Degree-based and Euler-characteristic-based upper bounds on the bondage
number, plus the order/domination inequalities they rest on.

Integer hypotheses are checked in exact arithmetic; bounds involving square
roots are evaluated in double precision and compared with ``EPS`` slack.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from .graph import Graph, GraphError, bits, degree_profile, girth, induced_subgraph, is_connected, popcount
from .solvers import HypothesisError, domination_number, independence_number

EPS = 1e-9


class InapplicableError(ValueError):
    """The bound's hypotheses exclude these parameters."""


def floor_eps(x: float) -> int:
    """``floor`` that treats values within EPS below an integer as that integer."""
    return math.floor(x + EPS)


# --------------------------------------------------------------------------
# b1, b2, b3, B, B'


@dataclass(frozen=True)
class DegreeBounds:
    b1: int
    b2: int
    b3: int
    B: int
    Bprime: int
    arg_pairs: dict[str, tuple[int, int]] = field(default_factory=dict)


def degree_based_bounds(g: Graph) -> DegreeBounds:
    if g.m == 0:
        raise GraphError("degree-based bounds need at least one edge")
    deg = g.degrees
    adj = g.adj
    b1 = b2 = b3 = None
    arg: dict[str, tuple[int, int]] = {}
    for x in range(g.n):
        ball = adj[x]
        for u in bits(adj[x]):
            ball |= adj[u]
        ball &= ~((1 << (x + 1)) - 1)  # y > x, distance 1 or 2
        for y in bits(ball):
            val = deg[x] + deg[y] - 1
            if b1 is None or val < b1:
                b1, arg["b1"] = val, (x, y)
    for x, y in g.edges:
        s = deg[x] + deg[y]
        v2 = s - 1 - popcount(adj[x] & adj[y])
        v3 = max(v2, s - 3)
        if b2 is None or v2 < b2:
            b2, arg["b2"] = v2, (x, y)
        if b3 is None or v3 < b3:
            b3, arg["b3"] = v3, (x, y)
    return DegreeBounds(b1, b2, b3, min(b1, b2), min(b1, b3), arg)


# --------------------------------------------------------------------------
# closed-form bounds in (n, g, chi, gamma)


@dataclass(frozen=True)
class EulerBounds:
    edge_max: Fraction | None
    ad_max: Fraction | None
    sgz_bondage: float | None


def euler_edge_ad_bounds(n: int, g: float, chi: int) -> EulerBounds:
    """Edge-count cap for girth ``g`` on a surface of characteristic ``chi``,
    and (for ``chi <= -1``) the average-degree and bondage caps derived
    from it.  ``None`` marks a part whose hypotheses fail."""
    if n < 1:
        raise ValueError("order must be positive")
    if g == math.inf:
        return EulerBounds(None, None, None)
    g = int(g)
    if g < 3:
        raise ValueError(f"girth {g} is impossible for a simple graph")
    edge_max = Fraction((n - chi) * g, g - 2)
    if chi > -1:
        return EulerBounds(edge_max, None, None)
    ad_max = Fraction(2 * g, g - 2) * (1 - Fraction(chi, n))
    sgz = 3 + 8 / (g - 2) - 4 * chi * g / (n * (g - 2))
    return EulerBounds(edge_max, ad_max, sgz)


def gz11_bound(chi: int) -> float:
    if chi > -1:
        raise InapplicableError("needs chi <= -1")
    return 11 + 3 * chi * (math.sqrt(17 - 8 * chi) - 3) / (chi - 1)


def average_degree_bound(chi: int) -> float:
    """Average-degree cap for any connected 2-cell embedded graph, chi <= -1."""
    if chi > -1:
        raise InapplicableError("needs chi <= -1")
    return 6 - 12 * chi / (3 + math.sqrt(17 - 8 * chi))


def _parity(n_parity: str | int | None) -> str:
    if isinstance(n_parity, int) and not isinstance(n_parity, bool):
        return "even" if n_parity % 2 == 0 else "odd"
    if n_parity not in ("even", "odd"):
        raise ValueError("the gamma = 2 case needs the parity of n ('even' or 'odd')")
    return n_parity


def domination_chi_bounds(
    gamma: int, chi: int, g: float = 3, n_parity: str | int | None = None
) -> tuple[float, float]:
    """``(ad_bound, bondage_bound)`` for a graph with domination number
    ``gamma`` and girth ``g`` 2-cell embedded with characteristic ``chi``.

    ``n_parity`` may be an order or ``'even'``/``'odd'``; only ``gamma = 2``
    uses it.  The bondage bound is always ``2 * ad_bound - 1``.
    """
    if chi > -1:
        raise InapplicableError("needs chi <= -1")
    if gamma < 2:
        raise InapplicableError("gamma = 1 is covered by teschner_bound")
    if gamma == 2:
        c = 6 if _parity(n_parity) == "even" else 7
        ad = 6 - 6 * chi / (2 + math.sqrt(c - 2 * chi))
    else:
        factor = 2.0 if g == math.inf else 2 * g / (g - 2)
        ad = factor * (1 - 2 * chi / (2 * gamma + 1 + math.sqrt(9 + 8 * gamma - 8 * chi)))
    return ad, 2 * ad - 1


def order_lower_bound(gamma: int, chi: int, n_parity: str | int | None = None) -> float:
    """Least order of a connected 2-cell embedded graph with domination
    number ``gamma`` on a surface of characteristic ``chi``."""
    if gamma < 1:
        raise ValueError("gamma must be positive")
    if gamma == 2:
        c = 6 if _parity(n_parity) == "even" else 7
        return 2 + math.sqrt(c - 2 * chi)
    return gamma + (1 + math.sqrt(9 + 8 * gamma - 8 * chi)) / 2


def gamma_upper_bound(n: int, chi: int) -> float:
    """Cap on the domination number (valid when gamma != 2)."""
    return n + (1 - math.sqrt(8 * n + 9 - 8 * chi)) / 2


def sanchis_edge_max(n: int, gamma: int) -> int:
    if not 3 <= gamma <= n / 2:
        raise HypothesisError(f"needs 3 <= gamma <= n/2, got gamma={gamma}, n={n}")
    return (n - gamma + 1) * (n - gamma) // 2


def delta_max(chi: int) -> int:
    """Largest possible minimum degree of a graph embeddable with characteristic ``chi``."""
    if chi > 2:
        raise ValueError(f"no surface has Euler characteristic {chi}")
    if chi >= 1:
        return 5
    return (5 + math.isqrt(49 - 24 * chi)) // 2


# Fixed constants for chi >= -2.  Each comes from its own surface result
# (sphere/projective plane, torus/Klein bottle, N3, S2/N4), not one formula.
TABLE2 = {2: 8, 1: 8, 0: 9, -1: 10, -2: 12}
TABLE1_RANGE = range(-23, -1)


def constant_bound(chi: int, table: int | None = None) -> int:
    """Constant cap on ``b(G)``.

    ``table=1``: the domination-number formula (needs gamma >= 4), floored;
    ``table=2``: the fixed constants for ``chi >= -2``.  Without ``table``
    the unconditional constant is used whenever it exists.
    """
    if chi > 2:
        raise ValueError(f"no surface has Euler characteristic {chi}")
    if table is None:
        table = 2 if chi in TABLE2 else 1
    if table == 2:
        if chi not in TABLE2:
            raise InapplicableError(f"no fixed constant for chi={chi}")
        return TABLE2[chi]
    if table != 1:
        raise ValueError(f"unknown table {table}")
    if chi > -1:
        raise InapplicableError("the gamma >= 4 formula needs chi <= -1")
    return floor_eps(11 - 24 * chi / (9 + math.sqrt(41 - 8 * chi)))


def teschner_bound(gamma: int, Delta: int, t: int | None = None) -> float:
    """Bondage bound for ``gamma <= 3``; exact (``ceil(t/2)``) when ``gamma = 1``,
    ``t`` being the number of vertices of degree ``n - 1``."""
    if gamma == 1:
        if t is None:
            raise ValueError("gamma = 1 needs t, the number of universal vertices")
        return -(-t // 2)
    if gamma == 2:
        return Delta + 1
    if gamma == 3:
        return 1.5 * Delta
    raise InapplicableError("only gamma in {1, 2, 3} is covered")


# --------------------------------------------------------------------------
# graph conditions


@dataclass
class ConditionReport:
    name: str
    applicable: bool
    holds: bool
    lhs: int | None = None
    rhs: int | None = None
    implied_bound: int | None = None
    note: str = ""
    corollaries: dict[str, "ConditionReport"] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def _beta0_of_class(g: Graph, vertices) -> int:
    sub, _ = induced_subgraph(g, vertices)
    return independence_number(sub)[0] if sub.n else 0


def s_vertex_condition(g: Graph, s: int, chi: int, beta0_Vs: int | None = None) -> ConditionReport:
    """Degree-``s`` sufficient condition for ``B'(G) <= 2s - 2``.

    Evaluates ``-14 chi < (s-4) beta0(<V_s>) + 2(s-5)n + 4|V_<=2|
    + 2 sum_{j=3}^{s-1} (5-j)|V_j|`` in integers.  The caller is responsible
    for ``g`` being 2-cell embedded with characteristic ``chi``; ``beta0_Vs``
    is computed exactly when omitted.
    """
    prof = degree_profile(g)
    vs = prof.V(s)
    if s < 4 or not vs:
        raise HypothesisError(f"needs s >= 4 and a vertex of degree s (s={s})")
    if beta0_Vs is None:
        beta0_Vs = _beta0_of_class(g, vs)
    rhs = (s - 4) * beta0_Vs + 2 * (s - 5) * g.n + 4 * len(prof.V_le(2))
    rhs += 2 * sum((5 - j) * len(prof.V(j)) for j in range(3, s))
    lhs = -14 * chi
    holds = lhs < rhs
    rep = ConditionReport(
        name=f"s-vertex(s={s})",
        applicable=True,
        holds=holds,
        lhs=lhs,
        rhs=rhs,
        implied_bound=2 * s - 2 if holds else None,
        note=f"beta0(<V_{s}>) = {beta0_Vs}",
    )
    rep.corollaries = corollary_conditions(g, chi)
    return rep


def corollary_conditions(g: Graph, chi: int) -> dict[str, ConditionReport]:
    """The degree-5/6/7 and minimum-degree special cases of the s-vertex
    condition, each with its own applicability."""
    prof = degree_profile(g)
    n = g.n
    v3, v4 = len(prof.V_le(3)), len(prof.V(4))
    out = {}

    def beta(r):
        return _beta0_of_class(g, prof.V(r))

    def report(name, applicable, lhs, rhs_fn, bound, why):
        if not applicable:
            return ConditionReport(name, False, False, note=why)
        rhs = rhs_fn()
        ok = lhs < rhs
        return ConditionReport(name, True, ok, lhs, rhs, bound if ok else None)

    out["pet-i"] = report(
        "pet-i", bool(prof.V(5)), -14 * chi, lambda: 4 * v3 + 2 * v4 + beta(5), 8, "V_5 is empty"
    )
    out["pet-ii"] = report(
        "pet-ii", bool(prof.V(6)), -7 * chi, lambda: 2 * v3 + v4 + beta(6) + n, 10, "V_6 is empty"
    )
    out["pet-iii"] = report(
        "pet-iii",
        not prof.V(6) and bool(prof.V(7)),
        -14 * chi,
        lambda: 4 * v3 + 2 * v4 + 3 * beta(7) + 4 * n,
        12,
        "needs V_6 empty and V_7 nonempty",
    )
    d = prof.delta
    out["delta"] = report(
        "delta",
        d >= 4,
        -14 * chi,
        lambda: (d - 4) * beta(d) + 2 * (d - 5) * n,
        2 * d - 2,
        "minimum degree below 4",
    )
    return out


def deltamax_condition(g: Graph, chi: int) -> ConditionReport:
    """``B'(G) <= 2 delta_max(chi) - 3`` when no vertex has degree
    ``delta_max(chi)``; ``chi`` must be the largest characteristic of a
    surface ``g`` embeds in."""
    dm = delta_max(chi)
    empty = not degree_profile(g).V(dm)
    if not empty:
        return ConditionReport("deltamax", False, False, note=f"V_{dm} is nonempty")
    return ConditionReport("deltamax", True, True, implied_bound=2 * dm - 3, note=f"delta_max = {dm}")


@dataclass(frozen=True)
class SamczechResult:
    holds: bool
    equality: bool
    p3: bool
    p4: bool
    b2: int
    Delta: int

    @property
    def consistent(self) -> bool:
        """Equality occurs exactly under one of the two regular cases."""
        return self.equality == (self.p3 or self.p4)


def samczech_check(g: Graph) -> SamczechResult:
    """``b2 <= Delta + 3`` for connected toroidal or Klein-bottle graphs,
    with the equality characterisation (4-regular triangle-free, or
    6-regular with every edge in at most two triangles)."""
    prof = degree_profile(g)
    b2 = degree_based_bounds(g).b2
    tri = [popcount(g.adj[u] & g.adj[v]) for u, v in g.edges]
    p3 = prof.is_regular(4) and max(tri, default=0) == 0
    p4 = prof.is_regular(6) and max(tri, default=0) <= 2
    return SamczechResult(b2 <= prof.Delta + 3, b2 == prof.Delta + 3, p3, p4, b2, prof.Delta)


def toroidal_ratio_check(g: Graph, mu: int) -> bool:
    """Structure forced on a connected toroidal/Klein-bottle graph when
    ``mu`` (its bondage number or b2) reaches ``1.5 * Delta``.  Returns
    False only if the forced structure is absent."""
    prof = degree_profile(g)
    d, D = prof.delta, prof.Delta
    if 2 * mu > 3 * D:
        return 4 <= d <= D <= 5 or prof.is_regular(3)
    if 2 * mu == 3 * D:
        six = prof.is_regular(6) and all(popcount(g.adj[u] & g.adj[v]) <= 2 for u, v in g.edges)
        return six or 3 <= d <= D == 4
    return True


# --------------------------------------------------------------------------
# aggregate report


@dataclass
class ChiBound:
    name: str
    value: float | None
    applicable: bool
    hypothesis: str
    observed: float | None = None
    satisfied: bool | None = None


@dataclass
class BoundsReport:
    degree_bounds: DegreeBounds
    chi: int | None
    chi_certified_by: str
    gamma: int
    girth: float
    chi_bounds: list[ChiBound]
    conditions: list[ConditionReport]
    conjecture_threshold: Fraction
    rem1: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        db = self.degree_bounds
        return {
            "degree_bounds": {
                "b1": db.b1, "b2": db.b2, "b3": db.b3, "B": db.B, "Bprime": db.Bprime,
                "arg_pairs": {k: list(v) for k, v in db.arg_pairs.items()},
            },
            "chi": self.chi,
            "chi_certified_by": self.chi_certified_by,
            "gamma": self.gamma,
            "girth": None if self.girth == math.inf else self.girth,
            "chi_bounds": [asdict(b) for b in self.chi_bounds],
            "conditions": [c.to_dict() for c in self.conditions],
            "conjecture_threshold": float(self.conjecture_threshold),
            "rem1": self.rem1,
        }


def bounds_report(
    g: Graph, chi: int | None = None, certified_by: str = "user-asserted", gamma: int | None = None
) -> BoundsReport:
    """Evaluate every bound for ``g``.  ``chi`` is taken on trust and
    labelled with ``certified_by``; without it only degree bounds apply."""
    db = degree_based_bounds(g)
    prof = degree_profile(g)
    n, m = g.n, g.m
    if gamma is None:
        gamma = domination_number(g)[0]
    gg = girth(g)
    connected = is_connected(g)
    ad = prof.ad
    cert = f"chi={chi} certified by {certified_by}"
    out: list[ChiBound] = []
    conds: list[ConditionReport] = []

    def add(name, value, ok, hyp, observed=None, upper=True):
        sat = None
        if ok and value is not None and observed is not None:
            sat = observed <= value + EPS if upper else observed >= value - EPS
        out.append(ChiBound(name, None if value is None else float(value), ok, hyp, observed, sat))

    add("2ad-1", 2 * ad - 1, n >= 2, "nontrivial graph", observed=db.b1)
    if gamma <= 3 and connected:
        t = sum(1 for d in prof.degrees if d == n - 1)
        add("teschner", teschner_bound(gamma, prof.Delta, t), True, f"connected, gamma={gamma}")
    rem1 = None
    if chi is not None:
        base = "" if connected else " [graph disconnected: inapplicable]"
        hyp = f"connected, 2-cell embedded; {cert}{base}"
        neg = chi <= -1 and connected
        eb = euler_edge_ad_bounds(n, gg, chi)
        add("edge-count", eb.edge_max, eb.edge_max is not None, f"finite girth; {cert}", observed=m)
        add("sgz-ad", eb.ad_max, neg and eb.ad_max is not None, f"chi <= -1, {hyp}", observed=float(ad))
        add("sgz-bondage", eb.sgz_bondage, neg and eb.sgz_bondage is not None, f"chi <= -1, {hyp}")
        add("gz11", gz11_bound(chi) if chi <= -1 else None, neg, f"chi <= -1, {hyp}", observed=float(2 * ad - 1))
        add("ad-general", average_degree_bound(chi) if chi <= -1 else None, neg, f"chi <= -1, {hyp}", observed=float(ad))
        if chi <= -1 and gamma >= 2:
            adb, bb = domination_chi_bounds(gamma, chi, gg, n)
            add("dom-ad", adb, connected, f"gamma={gamma}, {hyp}", observed=float(ad))
            add("dom-bondage", bb, connected, f"gamma={gamma}, {hyp}", observed=float(2 * ad - 1))
        if n >= 2:
            add("order", order_lower_bound(gamma, chi, n), connected, f"gamma={gamma}, {hyp}",
                observed=n, upper=False)
        if gamma != 2:
            add("gamma-cap", gamma_upper_bound(n, chi), connected, f"gamma != 2, {hyp}", observed=gamma)
        if 3 <= gamma <= n / 2:
            add("sanchis", sanchis_edge_max(n, gamma), connected, "connected, 3 <= gamma <= n/2", observed=m)
        if chi in TABLE2:
            add("constant", constant_bound(chi, 2), connected, f"embeddable; {cert}", observed=db.Bprime)
        if chi <= -1 and gamma >= 4:
            add("constant-gamma4", constant_bound(chi, 1), connected, f"gamma >= 4, {hyp}",
                observed=float(2 * ad - 1))
        add("min-degree", delta_max(chi), True, f"embeddable; {cert}", observed=prof.delta)
        if connected:
            for s in sorted(prof.classes):
                if s >= 4:
                    conds.append(s_vertex_condition(g, s, chi))
            conds.append(deltamax_condition(g, chi))
        if chi == 0 and connected:
            sc = samczech_check(g)
            conds.append(ConditionReport(
                "samczech", True, sc.holds and sc.consistent, sc.b2, prof.Delta + 3,
                note=f"equality={sc.equality} P3={sc.p3} P4={sc.p4}",
            ))
        d = prof.delta
        if chi <= -1 and d >= 6 and connected and eb.sgz_bondage is not None:
            cd = corollary_conditions(g, chi)["delta"]
            rem1 = {
                "delta_bound": cd.implied_bound,
                "sgz_bound": eb.sgz_bondage,
                "delta_better": cd.implied_bound is not None and cd.implied_bound < eb.sgz_bondage - EPS,
            }
    return BoundsReport(
        degree_bounds=db,
        chi=chi,
        chi_certified_by=certified_by,
        gamma=gamma,
        girth=gg,
        chi_bounds=out,
        conditions=conds,
        conjecture_threshold=Fraction(3 * prof.Delta, 2),
        rem1=rem1,
    )
