"""Surfaces, Euler characteristics and a planarity test."""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass

from .graph import CapacityError, Graph, bits

PLANARITY_MAX_ORDER = 64

ORIENTABLE = "orientable"
NON_ORIENTABLE = "non-orientable"
CERTIFICATES = ("by-construction", "by-planarity-test", "user-asserted")


def chi_of(kind: str, genus: int) -> int:
    if genus < 0:
        raise ValueError("genus must be non-negative")
    if kind == ORIENTABLE:
        return 2 - 2 * genus
    if kind == NON_ORIENTABLE:
        if genus < 1:
            raise ValueError("non-orientable genus starts at 1")
        return 2 - genus
    raise ValueError(f"unknown surface kind {kind!r}")


@dataclass(frozen=True)
class EmbeddingInfo:
    """A surface together with how we know the graph embeds there.

    ``kind`` is ``None`` for a bare Euler-characteristic assertion
    (``chi=<int>``), in which case ``genus`` is ``None`` too.
    """

    kind: str | None
    genus: int | None
    chi: int
    certified: str = "user-asserted"
    note: str = ""

    def __post_init__(self) -> None:
        if self.certified not in CERTIFICATES:
            raise ValueError(f"unknown certificate {self.certified!r}")
        if self.kind is not None and chi_of(self.kind, self.genus) != self.chi:
            raise ValueError("chi does not match the surface")

    @classmethod
    def surface(cls, kind: str, genus: int, certified: str = "user-asserted", note: str = "") -> "EmbeddingInfo":
        return cls(kind, genus, chi_of(kind, genus), certified, note)

    @property
    def name(self) -> str:
        if self.kind is None:
            return f"chi={self.chi}"
        return ("S" if self.kind == ORIENTABLE else "N") + str(self.genus)


_SURFACE_RE = re.compile(r"^\s*(?:([SN])(\d+)|chi\s*=\s*(-?\d+))\s*$")


def parse_surface(text: str, certified: str = "user-asserted") -> EmbeddingInfo:
    """Parse ``S<h>``, ``N<q>`` or ``chi=<int>``."""
    mt = _SURFACE_RE.match(text)
    if not mt:
        raise ValueError(f"bad surface descriptor {text!r}; expected S<h>, N<q> or chi=<int>")
    if mt.group(3) is not None:
        chi = int(mt.group(3))
        if chi > 2:
            raise ValueError(f"no surface has Euler characteristic {chi}")
        return EmbeddingInfo(None, None, chi, certified)
    kind = ORIENTABLE if mt.group(1) == "S" else NON_ORIENTABLE
    return EmbeddingInfo.surface(kind, int(mt.group(2)), certified)


def kn_genus(n: int) -> tuple[int, int]:
    """Orientable and non-orientable genus of ``K_n`` (Ringel-Youngs)."""
    if n < 3:
        return 0, 0
    k = (n - 3) * (n - 4)
    h = -(-k // 12)
    q = -(-k // 6)
    if n == 7:
        q = 3  # K7 does not embed in the Klein bottle
    return h, q


def euler_identity_check(n: int, m: int, f: int, chi: int) -> bool:
    return n - m + f == chi


# --------------------------------------------------------------------------
# planarity by path addition


def _biconnected_blocks(g: Graph) -> list[set[int]]:
    """Vertex sets of the biconnected components with at least 3 vertices."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[set[int]] = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        estack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(bits(g.adj[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    estack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(bits(g.adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    estack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    block = set()
                    while True:
                        a, b = estack.pop()
                        block.update((a, b))
                        if (a, b) == (parent, u):
                            break
                    if len(block) >= 3:
                        blocks.append(block)
    return blocks


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = min(adj)
    parent = {start: None}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in sorted(adj[u]):
            if w == parent[u]:
                continue
            if w in parent:
                # w is an ancestor-side vertex already seen; close the cycle
                path_u = [u]
                while path_u[-1] != start:
                    path_u.append(parent[path_u[-1]])
                path_w = [w]
                while path_w[-1] != start:
                    path_w.append(parent[path_w[-1]])
                common = set(path_u) & set(path_w)
                cu = [x for x in path_u if x not in common]
                cw = [x for x in path_w if x not in common]
                meet = next(x for x in path_u if x in common)
                return cu + [meet] + cw[::-1]
            parent[w] = u
            stack.append(w)
    raise ValueError("block has no cycle")


def _block_is_planar(adj: dict[int, set[int]]) -> bool:
    cycle = _find_cycle(adj)
    emb_vertices = set(cycle)
    emb_edges = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    faces = [list(cycle), list(cycle)]
    total_edges = sum(len(s) for s in adj.values()) // 2
    while len(emb_edges) < total_edges:
        fragments = []  # (attachments, path_finder data)
        for u in emb_vertices:
            for w in adj[u]:
                if w in emb_vertices and u < w and frozenset((u, w)) not in emb_edges:
                    fragments.append(({u, w}, ("chord", u, w)))
        seen: set[int] = set()
        for s in adj:
            if s in emb_vertices or s in seen:
                continue
            comp = {s}
            todo = [s]
            att = set()
            while todo:
                x = todo.pop()
                for w in adj[x]:
                    if w in emb_vertices:
                        att.add(w)
                    elif w not in comp:
                        comp.add(w)
                        todo.append(w)
            seen |= comp
            fragments.append((att, ("comp", comp)))
        choice = None
        for att, data in fragments:
            ok = [i for i, f in enumerate(faces) if att <= set(f)]
            if not ok:
                return False
            if choice is None or len(ok) < len(choice[2]):
                choice = (att, data, ok)
            if len(ok) == 1:
                break
        att, data, ok = choice
        face = faces[ok[0]]
        if data[0] == "chord":
            path = [data[1], data[2]]
        else:
            comp = data[1]
            a = min(att)
            b = min(att - {a})
            prev = {w: a for w in adj[a] if w in comp}
            todo = deque(sorted(prev))
            while todo:
                x = todo.popleft()
                if b in adj[x]:
                    break
                for w in sorted(adj[x]):
                    if w in comp and w not in prev:
                        prev[w] = x
                        todo.append(w)
            path = [b, x]
            while path[-1] != a:
                path.append(prev[path[-1]])
            path.reverse()
        i, j = face.index(path[0]), face.index(path[-1])
        k = len(face)
        fwd = [face[(i + t) % k] for t in range((j - i) % k + 1)]
        back = [face[(j + t) % k] for t in range((i - j) % k + 1)]
        inner = path[1:-1]
        faces[ok[0]] = fwd + inner[::-1]
        faces.append(back + inner)
        emb_vertices.update(inner)
        emb_edges.update(frozenset((path[t], path[t + 1])) for t in range(len(path) - 1))
        if len(faces) > 2 * total_edges:
            raise AssertionError("face bookkeeping diverged")
    return True


def is_planar(g: Graph) -> bool:
    """Path-addition planarity test, run on each biconnected block."""
    if g.n > PLANARITY_MAX_ORDER:
        raise CapacityError(f"planarity test supports n <= {PLANARITY_MAX_ORDER}")
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    for block in _biconnected_blocks(g):
        adj = {v: {w for w in bits(g.adj[v]) if w in block} for v in block}
        m = sum(len(s) for s in adj.values()) // 2
        if len(block) >= 3 and m > 3 * len(block) - 6:
            return False
        if m >= 9 and not _block_is_planar(adj):
            return False
    return True


def planar_certificate(g: Graph) -> EmbeddingInfo | None:
    """Sphere embedding certificate when ``g`` is planar, else ``None``."""
    if is_planar(g):
        return EmbeddingInfo.surface(ORIENTABLE, 0, "by-planarity-test")
    return None

