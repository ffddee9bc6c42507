"""Exact domination, independence and bondage numbers.

All three are exponential in the worst case; the searches here are meant
for desk-scale graphs (bondage up to roughly n = 20, m = 40).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import Edge, Graph, bits, is_connected, popcount

DEFAULT_BUDGET = 10**8
FAMILY_LIMIT = 20000


class HypothesisError(ValueError):
    """Input violates a standing hypothesis (connected, nontrivial, ...)."""


class BoundViolatedError(RuntimeError):
    """No edge set of size <= cap raised the domination number."""


class BudgetExceededError(RuntimeError):
    def __init__(self, message: str, calls: int):
        super().__init__(message)
        self.calls = calls


# --------------------------------------------------------------------------
# domination


def greedy_dominating_set(g: Graph) -> int:
    """Mask of a dominating set built by repeatedly taking the vertex that
    dominates the most undominated vertices (lowest index on ties)."""
    undominated = g.full_mask
    chosen = 0
    closed = g.closed
    while undominated:
        best_v, best_c = -1, -1
        for v in range(g.n):
            c = popcount(closed[v] & undominated)
            if c > best_c:
                best_v, best_c = v, c
        chosen |= 1 << best_v
        undominated &= ~closed[best_v]
    return chosen


class _DomSearch:
    """Branch on the closed neighbourhood of the undominated vertex with the
    fewest remaining candidates.  Candidates already tried in a sibling branch
    are forbidden below it, so each vertex set is generated at most once."""

    def __init__(self, n: int, closed: tuple[int, ...]):
        self.n = n
        self.closed = closed

    def run(self, limit: int, mode: str, cap: int | None = None) -> list[int]:
        # "min": tighten limit on every hit; "first"/"all": sets of size <= limit
        self.mode = mode
        self.limit = limit
        self.cap = cap
        self.found: list[int] = []
        self._rec((1 << self.n) - 1, 0, 0, 0)
        return self.found

    def _rec(self, undominated: int, chosen: int, size: int, forbidden: int) -> bool:
        if not undominated:
            if self.mode == "min":
                self.found = [chosen]
                self.limit = size - 1
                return False
            self.found.append(chosen)
            return self.mode == "first" or (self.cap is not None and len(self.found) > self.cap)
        room = self.limit - size
        if room <= 0:
            return False
        closed = self.closed
        allowed = ~forbidden
        pick, pick_c = -1, self.n + 1
        cover = 0
        for v in bits(undominated):
            c = closed[v] & allowed
            k = popcount(c)
            if k < pick_c:
                pick, pick_c = v, k
                if k == 0:
                    return False
        for u in range(self.n):
            if allowed >> u & 1:
                cover = max(cover, popcount(closed[u] & undominated))
        if -(-popcount(undominated) // cover) > room:
            return False
        cands = list(bits(closed[pick] & allowed))
        cands.sort(key=lambda u: -popcount(closed[u] & undominated))
        for u in cands:
            if self._rec(undominated & ~closed[u], chosen | 1 << u, size + 1, forbidden):
                return True
            forbidden |= 1 << u
            if self.mode == "min" and size >= self.limit:
                return False
        return False


def domination_number(g: Graph) -> tuple[int, list[int]]:
    """Return ``(gamma, D)`` with ``D`` a minimum dominating set."""
    if g.n == 0:
        raise HypothesisError("domination number of the null graph")
    greedy = greedy_dominating_set(g)
    found = _DomSearch(g.n, g.closed).run(popcount(greedy) - 1, "min")
    best = found[0] if found else greedy
    return popcount(best), list(bits(best))


def has_dominating_set(g: Graph, k: int) -> bool:
    """Decide whether ``g`` has a dominating set of at most ``k`` vertices."""
    return _has_dom(g.n, g.closed, k)


def _has_dom(n: int, closed: tuple[int, ...], k: int) -> bool:
    return bool(_DomSearch(n, closed).run(k, "first"))


def minimum_dominating_sets(g: Graph, gamma: int | None = None, limit: int | None = None) -> list[int] | None:
    """All minimum dominating sets as vertex masks, or ``None`` when there
    are more than ``limit`` of them."""
    if gamma is None:
        gamma = domination_number(g)[0]
    found = _DomSearch(g.n, g.closed).run(gamma, "all", cap=limit)
    if limit is not None and len(found) > limit:
        return None
    return found


def is_dominating(g: Graph, vertices) -> bool:
    dom = 0
    for v in vertices:
        dom |= g.closed[v]
    return dom == g.full_mask


# --------------------------------------------------------------------------
# independence


def independence_number(g: Graph) -> tuple[int, list[int]]:
    """Return ``(beta0, I)`` with ``I`` a maximum independent set."""
    adj = g.adj
    best = [0, 0]

    def rec(cand: int, chosen: int, size: int) -> None:
        # degree <= 1 vertices inside cand can always be taken
        while True:
            forced = 0
            for v in bits(cand):
                if popcount(adj[v] & cand) <= 1 and not forced & adj[v]:
                    forced |= 1 << v
            if not forced:
                break
            for v in bits(forced):
                if cand >> v & 1:
                    cand &= ~(adj[v] | 1 << v)
                    chosen |= 1 << v
                    size += 1
        if not cand:
            if size > best[0]:
                best[:] = [size, chosen]
            return
        if size + popcount(cand) <= best[0]:
            return
        v = max(bits(cand), key=lambda x: (popcount(adj[x] & cand), -x))
        rec(cand & ~(adj[v] | 1 << v), chosen | 1 << v, size + 1)
        rec(cand & ~(1 << v), chosen, size)

    if g.n:
        rec(g.full_mask, 0, 0)
    return best[0], list(bits(best[1]))


def is_independent(g: Graph, vertices) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return all(not g.adj[v] & mask for v in vertices)


# --------------------------------------------------------------------------
# bondage


@dataclass(frozen=True)
class BondageResult:
    value: int
    witness: tuple[Edge, ...]
    cap_used: int
    gamma: int
    method: str
    calls: int


def _check_bondage_input(g: Graph) -> None:
    if g.n < 2:
        raise HypothesisError("bondage number needs at least two vertices")
    if not is_connected(g):
        raise HypothesisError("bondage number is only defined here for connected graphs")


def bondage_number(
    g: Graph,
    cap: int | None = None,
    budget: int = DEFAULT_BUDGET,
    method: str = "auto",
) -> BondageResult:
    """Exact bondage number with the lexicographically first minimum witness.

    ``method`` is ``"enumerate"`` (try every k-subset of edges in edge-index
    order), ``"cover"`` (search over the minimum dominating sets of ``g``)
    or ``"auto"``.  Both routes return the same value and witness.  ``budget``
    bounds the number of domination decision queries (enumerate) or search
    nodes (cover).
    """
    _check_bondage_input(g)
    gamma = domination_number(g)[0]
    if cap is None:
        from .bounds import degree_based_bounds

        cap = degree_based_bounds(g).Bprime
    if method not in ("auto", "cover", "enumerate"):
        raise ValueError(f"unknown bondage method {method!r}")
    family = None
    if method != "enumerate" and g.m <= 64:
        family = minimum_dominating_sets(g, gamma, limit=FAMILY_LIMIT)
    if method == "cover" and family is None:
        raise ValueError("cover route unavailable: too many minimum dominating sets or m > 64")
    if family is not None:
        value, witness, calls = _bondage_cover(g, family, cap, budget)
        used = "cover"
    else:
        value, witness, calls = _bondage_enumerate(g, gamma, cap, budget)
        used = "enumerate"
    return BondageResult(value, tuple(g.edges[i] for i in witness), cap, gamma, used, calls)


def _bondage_enumerate(g: Graph, gamma: int, cap: int, budget: int) -> tuple[int, tuple[int, ...], int]:
    edges = g.edges
    calls = 0
    for k in range(1, min(cap, g.m) + 1):
        for combo in combinations(range(g.m), k):
            calls += 1
            if calls > budget:
                raise BudgetExceededError(f"enumeration budget {budget} exhausted at k={k}", calls)
            rows = list(g.closed)
            for i in combo:
                u, v = edges[i]
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            if not _has_dom(g.n, tuple(rows), gamma):
                return k, combo, calls
    raise BoundViolatedError(f"no edge set of size <= {cap} raises the domination number")


def _breaking_options(g: Graph, family: list[int]) -> list[list[int]]:
    """For each minimum dominating set D: the edge masks E(v, D), v outside D,
    reduced to inclusion-minimal ones.  An edge set breaks D iff it contains
    one of them."""
    idx = g.edge_index
    out = []
    for d in family:
        opts = set()
        for v in bits(g.full_mask & ~d):
            mask = 0
            for u in bits(g.adj[v] & d):
                mask |= 1 << idx[(u, v) if u < v else (v, u)]
            opts.add(mask)
        ordered = sorted(opts, key=lambda x: (popcount(x), x))
        minimal: list[int] = []
        for o in ordered:
            if not any(o & p == p for p in minimal):
                minimal.append(o)
        out.append(minimal)
    return out


def _bondage_cover(g: Graph, family: list[int], cap: int, budget: int) -> tuple[int, tuple[int, ...], int]:
    options = _breaking_options(g, family)
    width = max(len(o) for o in options)
    mat = np.zeros((len(options), width), dtype=np.uint64)
    pad = np.full((len(options), width), 127, dtype=np.uint8)
    for r, opts in enumerate(options):
        mat[r, : len(opts)] = opts
        pad[r, : len(opts)] = 0
    calls = 0

    def solutions(k: int) -> list[int]:
        nonlocal calls
        found: list[int] = []
        seen: set[int] = set()
        stack = [0]
        while stack:
            s = stack.pop()
            calls += 1
            if calls > budget:
                raise BudgetExceededError(f"search budget {budget} exhausted at k={k}", calls)
            resid = np.bitwise_count(mat & np.uint64(~s & 0xFFFFFFFFFFFFFFFF)) + pad
            mins = resid.min(axis=1)
            rem = k - popcount(s)
            if int(mins.max()) == 0:
                found.append(s)
                continue
            if int(mins.max()) > rem:
                continue
            feasible = (resid <= rem).sum(axis=1)
            feasible[mins == 0] = width + 1
            row = int(np.argmin(feasible))
            for j, opt in enumerate(options[row]):
                if resid[row, j] <= rem:
                    t = s | opt
                    if t not in seen:
                        seen.add(t)
                        stack.append(t)
        return found

    for k in range(1, min(cap, g.m) + 1):
        found = solutions(k)
        if found:
            best = min(tuple(bits(s)) for s in found)
            return k, best, calls
    raise BoundViolatedError(f"no edge set of size <= {cap} raises the domination number")


def bondage_witness_valid(g: Graph, witness) -> bool:
    """True iff deleting ``witness`` raises the domination number."""
    gamma = domination_number(g)[0]
    return domination_number(g.remove_edges(witness))[0] > gamma
