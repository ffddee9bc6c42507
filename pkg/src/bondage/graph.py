"""Simple undirected graphs on dense vertex indices, stored as bit masks.

Every vertex ``v`` owns one integer whose bit ``u`` is set iff ``uv`` is an
edge.  Neighbourhood intersection, domination closure and independence tests
all reduce to a handful of integer operations on these masks.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

MAX_ORDER = 128

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph operation (bad vertex, non-edge, ...)."""


class CapacityError(GraphError):
    """The requested graph would exceed ``MAX_ORDER`` vertices."""


class ParseError(GraphError):
    """Malformed graph text; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def _check_order(n: int) -> None:
    if n < 0:
        raise GraphError(f"negative order {n}")
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds capacity {MAX_ORDER}")


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int) -> Iterable[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph on ``0..n-1``.

    Construct with :meth:`from_edges`; the constructor takes the raw
    adjacency masks and validates symmetry and the absence of loops.
    """

    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} adjacent to a vertex out of range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph; loops are dropped and repeated edges collapsed."""
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order.

        The position of an edge in this tuple is its *edge index*.
        """
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return tuple(out)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def closed(self) -> tuple[int, ...]:
        """Closed neighbourhood masks ``N[v]``."""
        return tuple(row | 1 << v for v, row in enumerate(self.adj))

    def _vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")
        return v

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[self._vertex(v)]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[self._vertex(v)])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(popcount(row) for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[self._vertex(u)] >> self._vertex(v) & 1)

    def remove_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            if not self.has_edge(u, v):
                raise GraphError(f"({u}, {v}) is not an edge")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))


# --------------------------------------------------------------------------
# degree data


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    delta: int
    Delta: int
    classes: dict[int, frozenset[int]]
    degree_sum: int
    n: int

    @property
    def ad(self) -> Fraction:
        """Average degree ``2m/n`` as an exact rational."""
        return Fraction(self.degree_sum, self.n)

    def V(self, r: int) -> frozenset[int]:
        """Vertices of degree exactly ``r``."""
        return self.classes.get(r, frozenset())

    def V_le(self, r: int) -> frozenset[int]:
        """Vertices of degree at most ``r``."""
        return frozenset(v for v, d in enumerate(self.degrees) if d <= r)

    @property
    def cumulative(self) -> dict[int, frozenset[int]]:
        return {r: self.V_le(r) for r in range(self.Delta + 1)}

    def is_regular(self, r: int | None = None) -> bool:
        if r is None:
            return self.delta == self.Delta
        return self.delta == self.Delta == r


def degree_profile(g: Graph) -> DegreeProfile:
    if g.n == 0:
        raise GraphError("degree profile of the null graph is undefined")
    degs = g.degrees
    classes: dict[int, set[int]] = {}
    for v, d in enumerate(degs):
        classes.setdefault(d, set()).add(v)
    return DegreeProfile(
        degrees=degs,
        delta=min(degs),
        Delta=max(degs),
        classes={d: frozenset(s) for d, s in sorted(classes.items())},
        degree_sum=sum(degs),
        n=g.n,
    )


# --------------------------------------------------------------------------
# distances and cycles


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [math.inf] * g.n
    dist[g._vertex(source)] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in bits(g.adj[u]):
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    """Shortest-path length between ``u`` and ``v``; ``math.inf`` if unreachable."""
    g._vertex(v)
    return bfs_distances(g, u)[v]


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in bits(g.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def edge_triangles(g: Graph, u: int, v: int) -> int:
    """Number of triangles through the edge ``uv``, i.e. ``|N(u) & N(v)|``."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return popcount(g.adj[u] & g.adj[v])


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def components(g: Graph) -> list[list[int]]:
    left = g.full_mask
    out = []
    while left:
        start = left & -left
        seen = frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(list(bits(seen)))
        left &= ~seen
    return out


# --------------------------------------------------------------------------
# constructions


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``.

    Returns the new graph and ``index_map`` where ``index_map[i]`` is the
    original vertex that became vertex ``i``.
    """
    index_map = sorted(set(g._vertex(v) for v in vertices))
    pos = {v: i for i, v in enumerate(index_map)}
    keep = to_mask(index_map)
    rows = []
    for v in index_map:
        rows.append(to_mask(pos[u] for u in bits(g.adj[v] & keep)))
    return Graph(len(index_map), tuple(rows)), index_map


def corona(g1: Graph, g2: Graph) -> Graph:
    """Frucht-Harary corona ``g1 o g2``.

    Vertices ``0..n1-1`` are ``g1``; the ``i``-th copy of ``g2`` occupies
    ``n1 + i*n2 .. n1 + (i+1)*n2 - 1`` and is joined to vertex ``i``.
    """
    n1, n2 = g1.n, g2.n
    n = n1 * (1 + n2)
    _check_order(n)
    edges = list(g1.edges)
    for i in range(n1):
        base = n1 + i * n2
        edges.extend((base + a, base + b) for a, b in g2.edges)
        edges.extend((i, base + j) for j in range(n2))
    return Graph.from_edges(n, edges)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product; vertex ``(u, v)`` is numbered ``u * n2 + v``."""
    n1, n2 = g1.n, g2.n
    _check_order(n1 * n2)
    edges = []
    for u in range(n1):
        edges.extend((u * n2 + a, u * n2 + b) for a, b in g2.edges)
    for a, b in g1.edges:
        edges.extend((a * n2 + v, b * n2 + v) for v in range(n2))
    return Graph.from_edges(n1 * n2, edges)


# --------------------------------------------------------------------------
# text formats

GRAPH6_HEADER = ">>graph6<<"


def _g6_encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    out = [_g6_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    base = len(text) - len(text.lstrip())
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base += len(GRAPH6_HEADER)
    if not s:
        raise ParseError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 order field", base + len(vals))
        if vals[1] == 63:
            raise CapacityError("graph6 order beyond 258047 is not supported")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    _check_order(n)
    need = n * (n - 1) // 2
    nbytes = (need + 5) // 6
    if len(vals) - pos != nbytes:
        off = base + min(len(vals), pos + nbytes)
        raise ParseError(
            f"graph6 body has {len(vals) - pos} bytes, expected {nbytes} for n={n}", off
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need % 6 and vals[-1] & ((1 << (6 - need % 6)) - 1):
        raise ParseError("nonzero graph6 padding bits", base + len(vals) - 1)
    return Graph(n, tuple(rows))


def parse_edge_list(text: str) -> tuple[Graph, dict[str, int]]:
    """Parse ``u v`` lines; returns the graph and the identifier mapping.

    A ``# n=<N>`` comment fixes the order (and allows isolated vertices).
    If every identifier is a non-negative integer they are kept as indices;
    otherwise identifiers are numbered in order of first appearance.
    """
    header_n: int | None = None
    pairs: list[tuple[str, str, int]] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.strip()
        if body.startswith("#"):
            tag = body[1:].strip().replace(" ", "")
            if tag.startswith("n="):
                try:
                    header_n = int(tag[2:])
                except ValueError:
                    raise ParseError(f"bad order header {body!r}", offset) from None
        elif body:
            toks = body.split()
            if len(toks) != 2:
                raise ParseError(f"expected 'u v', got {body!r}", offset)
            pairs.append((toks[0], toks[1], offset))
        offset += len(line.encode())

    numeric = all(a.isdigit() and b.isdigit() for a, b, _ in pairs)
    if numeric:
        top = max((max(int(a), int(b)) for a, b, _ in pairs), default=-1)
        n = top + 1 if header_n is None else header_n
        if top >= n:
            off = next(o for a, b, o in pairs if max(int(a), int(b)) >= n)
            raise ParseError(f"vertex id {top} not below declared n={n}", off)
        mapping = {str(v): v for v in range(n)}
    else:
        mapping = {}
        for a, b, _ in pairs:
            for tok in (a, b):
                mapping.setdefault(tok, len(mapping))
        n = len(mapping)
        if header_n is not None:
            if header_n < n:
                raise ParseError(f"{n} identifiers exceed declared n={header_n}", 0)
            n = header_n
    _check_order(n)
    g = Graph.from_edges(n, ((mapping[a], mapping[b]) for a, b, _ in pairs))
    return g, mapping


def to_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges]
    top = max((v for _, v in g.edges), default=-1)
    if top != g.n - 1:
        lines.insert(0, f"# n={g.n}")
    return "\n".join(lines)


FORMATS = ("graph6", "edgelist")


def _fmt(format: str) -> str:
    key = format.replace("-", "").replace("_", "").lower()
    if key not in FORMATS:
        raise ValueError(f"unknown graph format {format!r}; expected one of {FORMATS}")
    return key


def parse_graph(text: str, format: str = "graph6") -> Graph:
    if _fmt(format) == "graph6":
        return from_graph6(text)
    return parse_edge_list(text)[0]


def serialize_graph(g: Graph, format: str = "graph6") -> str:
    if _fmt(format) == "graph6":
        return to_graph6(g)
    return to_edge_list(g)


def read_graph6_lines(text: str) -> Iterable[tuple[int, str]]:
    """Yield ``(line_number, graph6)`` for each non-blank, non-comment line."""
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            yield lineno, s
