"""Deterministic generators for the graph families used as fixtures.

Each generator returns a labelled :class:`Graph`; :func:`make_family`
also attaches the surface the construction embeds in and its face count
whenever these are known by construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple

from .graph import Graph, GraphError, cartesian_product, corona
from .surfaces import ORIENTABLE, EmbeddingInfo, kn_genus


class FamilyError(ValueError):
    """Invalid family name or parameters."""


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "both sides must be nonempty")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def rook(n: int) -> Graph:
    """``K_n x K_n``."""
    _need(n >= 2, "rook graph needs n >= 2")
    return cartesian_product(complete(n), complete(n))


def torus_tri(m: int, n: int) -> Graph:
    """Triangular grid on ``Z_m x Z_n``: vertex ``(i, j)`` is ``i*n + j``,
    joined to ``(i+-1, j)``, ``(i, j+-1)`` and ``(i+1, j+1)``, ``(i-1, j-1)``."""
    _need(m >= 3 and n >= 3, "torus triangulation needs m, n >= 3")
    edges = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            edges.append((v, ((i + 1) % m) * n + j))
            edges.append((v, i * n + (j + 1) % n))
            edges.append((v, ((i + 1) % m) * n + (j + 1) % n))
    return Graph.from_edges(m * n, edges)


def icosahedron() -> Graph:
    edges = []
    for k in range(5):
        up, up2 = 1 + k, 1 + (k + 1) % 5
        lo, lo2 = 6 + k, 6 + (k + 1) % 5
        edges += [(0, up), (up, up2), (lo, lo2), (lo, 11), (up, lo), (up2, lo)]
    return Graph.from_edges(12, edges)


def cube() -> Graph:
    return Graph.from_edges(8, ((v, v ^ 1 << b) for v in range(8) for b in range(3)))


def sanchis_p1(gamma: int, assignment) -> Graph:
    """Clique on ``sum(assignment)`` vertices plus ``gamma`` independent
    vertices; independent vertex ``i`` (index ``i``) is joined to the next
    ``assignment[i]`` clique vertices."""
    assignment = list(assignment)
    _need(gamma >= 1 and len(assignment) == gamma, "assignment must have gamma entries")
    _need(all(a >= 1 for a in assignment), "every independent vertex needs a clique neighbour")
    n = gamma + sum(assignment)
    clique = range(gamma, n)
    edges = [(u, v) for u in clique for v in clique if u < v]
    nxt = gamma
    for i, a in enumerate(assignment):
        edges += [(i, nxt + k) for k in range(a)]
        nxt += a
    return Graph.from_edges(n, edges)


def sanchis_p2(n: int, split=None) -> Graph:
    """The five-vertex gadget ``x1..x5`` (vertices 0..4) plus an ``(n-5)``-clique
    whose first ``a`` vertices see ``x1`` and remaining ``b`` see ``x3``."""
    _need(n >= 8, "needs n >= 8")
    if split is None:
        split = ((n - 5 + 1) // 2, (n - 5) // 2)
    a, b = split
    _need(a >= 1 and b >= 1 and a + b == n - 5, "split must be two positive parts summing to n - 5")
    x1, x2, x3, x4, x5 = range(5)
    edges = [(x1, x3), (x2, x4), (x2, x5)]
    clique = list(range(5, n))
    edges += [(u, v) for u in clique for v in clique if u < v]
    for k, c in enumerate(clique):
        edges += [(c, x4), (c, x5), (c, x1 if k < a else x3)]
    return Graph.from_edges(n, edges)


def even_split(total: int, parts: int) -> list[int]:
    q, r = divmod(total, parts)
    return [q + 1] * r + [q] * (parts - r)


def tightness_family(gamma: int, t: int) -> tuple[Graph, int]:
    """Edge-maximal graph of domination number ``gamma`` meeting the order
    bound with equality; returns the graph and its Euler characteristic
    ``2 - 2p`` with ``p = (m - n + 1) / 2``."""
    _need(gamma >= 4 and t >= gamma, "needs t >= gamma >= 4")
    i = 1 if gamma % 2 else 2
    g = sanchis_p1(gamma, even_split(4 * t + i, gamma))
    twice_p = g.m - g.n + 1
    if twice_p % 2:
        raise AssertionError("odd genus numerator")
    return g, 2 - twice_p


def tightness_genus(gamma: int, t: int) -> int:
    if gamma % 2:
        return 4 * t * t + t + (1 - gamma) // 2
    return 4 * t * t + 3 * t + 1 - gamma // 2


# --------------------------------------------------------------------------
# dispatch


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        params = {
            k: v.to_dict() if isinstance(v, FamilySpec) else (list(v) if isinstance(v, tuple) else v)
            for k, v in self.params.items()
        }
        return {"family": self.name, "params": params}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "FamilySpec":
        params = dict(d.get("params", {}))
        if isinstance(params.get("base"), dict):
            params["base"] = cls.from_dict(params["base"])
        return cls(d["family"], params)

    def label(self) -> str:
        inner = ",".join(
            f"{k}={v.label() if isinstance(v, FamilySpec) else v}" for k, v in self.params.items()
        )
        return f"{self.name}({inner})"


class FamilyGraph(NamedTuple):
    graph: Graph
    embedding: EmbeddingInfo | None
    faces: int | None


_SPHERE = EmbeddingInfo.surface(ORIENTABLE, 0, "by-construction")


def _complete_entry(n: int) -> FamilyGraph:
    g = complete(n)
    h, _ = kn_genus(n)
    emb = EmbeddingInfo.surface(ORIENTABLE, h, "by-construction", "orientable genus of K_n (Ringel-Youngs)")
    # minimum-genus embeddings of connected graphs are 2-cell
    faces = g.m - g.n + emb.chi if n >= 3 else 1
    return FamilyGraph(g, emb, faces)


def make_family(spec: FamilySpec | dict[str, Any]) -> FamilyGraph:
    if isinstance(spec, dict):
        spec = FamilySpec.from_dict(spec)
    p = spec.params
    name = spec.name
    try:
        if name == "complete":
            return _complete_entry(int(p["n"]))
        if name == "cycle":
            return FamilyGraph(cycle(int(p["n"])), _SPHERE, 2)
        if name == "path":
            return FamilyGraph(path(int(p["n"])), _SPHERE, 1)
        if name == "complete_bipartite":
            a, b = int(p["a"]), int(p["b"])
            return FamilyGraph(complete_bipartite(a, b), _SPHERE if min(a, b) <= 2 else None, None)
        if name == "rook":
            n = int(p["n"])
            return FamilyGraph(rook(n), _SPHERE if n == 2 else None, 2 if n == 2 else None)
        if name == "torus_tri":
            m, n = int(p["m"]), int(p["n"])
            torus = EmbeddingInfo.surface(ORIENTABLE, 1, "by-construction")
            return FamilyGraph(torus_tri(m, n), torus, 2 * m * n)
        if name == "icosahedron":
            return FamilyGraph(icosahedron(), _SPHERE, 20)
        if name == "cube":
            return FamilyGraph(cube(), _SPHERE, 6)
        if name == "corona_k1":
            base = p["base"]
            if isinstance(base, Graph):
                bg, emb, faces = base, None, None
            else:
                bg, emb, faces = make_family(base)
            _need(bg.n <= 64, "corona base must have at most 64 vertices")
            # pendant edges sit inside existing faces: same surface, same face count
            return FamilyGraph(corona(bg, complete(1)), emb, faces)
        if name == "sanchis_p1":
            return FamilyGraph(sanchis_p1(int(p["gamma"]), p["assignment"]), None, None)
        if name == "sanchis_p2":
            split = p.get("split")
            return FamilyGraph(sanchis_p2(int(p["n"]), tuple(split) if split else None), None, None)
        if name == "tightness":
            gamma, t = int(p["gamma"]), int(p["t"])
            g, chi = tightness_family(gamma, t)
            genus = (2 - chi) // 2
            emb = EmbeddingInfo.surface(
                ORIENTABLE, genus, "by-construction",
                "4-edge-connected P1 graph; orientable embedding taken as asserted, not re-verified",
            )
            return FamilyGraph(g, emb, None)
    except KeyError as exc:
        raise FamilyError(f"family {name!r} is missing parameter {exc.args[0]!r}") from None
    except GraphError as exc:
        raise FamilyError(str(exc)) from exc
    raise FamilyError(f"unknown family {name!r}")


FAMILY_NAMES = (
    "complete", "cycle", "path", "rook", "torus_tri", "corona_k1",
    "sanchis_p1", "sanchis_p2", "tightness", "complete_bipartite", "icosahedron", "cube",
)


def parse_family_params(text: str) -> dict[str, Any]:
    """Parse ``k=v,k=v``.  Values are ints, ``a:b:c`` int tuples, or for
    ``base`` a nested ``family:k=v:k=v`` description."""
    out: dict[str, Any] = {}
    if not text:
        return out
    for item in text.split(","):
        key, sep, val = item.partition("=")
        key = key.strip()
        if not sep:
            raise FamilyError(f"bad parameter {item!r}; expected key=value")
        if key == "base":
            head, *rest = val.split(":")
            out[key] = FamilySpec(head, parse_family_params(",".join(rest)))
        elif ":" in val:
            out[key] = tuple(int(x) for x in val.split(":"))
        else:
            out[key] = int(val)
    return out
