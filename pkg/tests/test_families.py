import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bondage import bounds as bd
from bondage.families import (
    FAMILY_NAMES,
    FamilyError,
    FamilySpec,
    even_split,
    make_family,
    parse_family_params,
    sanchis_p1,
    sanchis_p2,
    tightness_family,
    tightness_genus,
    torus_tri,
)
from bondage.graph import degree_profile, edge_triangles, is_connected
from bondage.solvers import domination_number
from bondage.surfaces import euler_identity_check

SPECS = [
    {"family": "complete", "params": {"n": 5}},
    {"family": "cycle", "params": {"n": 6}},
    {"family": "path", "params": {"n": 4}},
    {"family": "rook", "params": {"n": 3}},
    {"family": "torus_tri", "params": {"m": 3, "n": 4}},
    {"family": "corona_k1", "params": {"base": {"family": "complete", "params": {"n": 6}}}},
    {"family": "sanchis_p1", "params": {"gamma": 3, "assignment": [2, 2, 2]}},
    {"family": "sanchis_p2", "params": {"n": 9, "split": [2, 2]}},
    {"family": "tightness", "params": {"gamma": 4, "t": 4}},
    {"family": "complete_bipartite", "params": {"a": 2, "b": 3}},
    {"family": "icosahedron", "params": {}},
    {"family": "cube", "params": {}},
]


@pytest.mark.parametrize("spec", SPECS, ids=[s["family"] for s in SPECS])
def test_connected_simple_deterministic(spec):
    a, b = make_family(spec), make_family(FamilySpec.from_dict(spec))
    assert a.graph == b.graph
    assert is_connected(a.graph)
    assert FamilySpec.from_dict(spec).to_dict() == spec
    if a.faces is not None:
        assert euler_identity_check(a.graph.n, a.graph.m, a.faces, a.embedding.chi)


def test_every_name_is_covered():
    assert sorted(s["family"] for s in SPECS) == sorted(FAMILY_NAMES)


def test_make_family_examples():
    t = make_family({"family": "torus_tri", "params": {"m": 3, "n": 3}})
    assert (t.graph.n, t.graph.m, t.faces, t.embedding.chi) == (9, 27, 18, 0)
    assert degree_profile(t.graph).is_regular(6)
    r = make_family({"family": "rook", "params": {"n": 3}}).graph
    assert r.n == 9 and degree_profile(r).is_regular(4)
    c = make_family(SPECS[5]).graph
    assert (c.n, c.m) == (12, 21)


@pytest.mark.parametrize("m,n", [(3, 3), (3, 4), (4, 4), (4, 5), (5, 7)])
def test_torus_counts(m, n):
    fg = make_family({"family": "torus_tri", "params": {"m": m, "n": n}})
    g = fg.graph
    assert degree_profile(g).is_regular(6)
    assert g.m == 3 * m * n and fg.faces == 2 * m * n
    assert euler_identity_check(g.n, g.m, fg.faces, 0)


@pytest.mark.parametrize("m,n", [(4, 4), (4, 5), (5, 5), (6, 4)])
def test_torus_edges_in_two_triangles(m, n):
    g = torus_tri(m, n)
    assert all(edge_triangles(g, u, v) == 2 for u, v in g.edges)


@pytest.mark.parametrize("m,n", [(3, 3), (3, 4), (5, 3)])
def test_torus_side_three_has_extra_triangles(m, n):
    # a side of length 3 makes the wrap-around line itself a triangle
    g = torus_tri(m, n)
    assert max(edge_triangles(g, u, v) for u, v in g.edges) == 3


def test_sanchis_p1_examples():
    g = sanchis_p1(4, (1, 1, 1, 1))
    assert (g.n, g.m) == (8, 10)
    g = sanchis_p1(3, (2, 2, 2))
    assert (g.n, g.m) == (9, 21)
    g = sanchis_p1(4, (4, 4, 4, 4))
    assert g.n == 20 and degree_profile(g).delta == 4
    with pytest.raises(FamilyError):
        sanchis_p1(3, (1, 0, 2))


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 6).flatmap(lambda k: st.lists(st.integers(1, 4), min_size=k, max_size=k)))
def test_sanchis_p1_gamma_and_edges(assignment):
    gamma = len(assignment)
    g = sanchis_p1(gamma, assignment)
    k = g.n - gamma
    assert g.m == (k + 1) * k // 2
    assert domination_number(g)[0] == gamma


def test_sanchis_p2_examples():
    g = sanchis_p2(8, (2, 1))
    assert (g.n, g.m) == (8, 15)
    assert domination_number(g)[0] == 3
    assert sanchis_p2(9, (2, 2)).m == 21
    for bad in ((0, 3), (3, 0), (2, 2)):
        with pytest.raises(FamilyError):
            sanchis_p2(8, bad)


@pytest.mark.parametrize("n", range(8, 16))
def test_sanchis_p2_equality(n):
    for a in range(1, n - 5):
        g = sanchis_p2(n, (a, n - 5 - a))
        assert g.m == bd.sanchis_edge_max(n, 3) == (n - 2) * (n - 3) // 2
        assert domination_number(g)[0] == 3


def test_tightness_examples():
    g, chi = tightness_family(4, 4)
    assert (g.n, g.m, chi) == (22, 171, -148)
    assert (g.m - g.n + 1) // 2 == 75 == tightness_genus(4, 4)
    assert degree_profile(g).delta >= 4
    assert domination_number(g)[0] == 4
    assert bd.order_lower_bound(4, chi) == pytest.approx(22, abs=1e-9)
    assert bd.gamma_upper_bound(22, chi) == pytest.approx(4, abs=1e-9)
    g, chi = tightness_family(5, 5)
    assert (g.n, chi) == (26, -204)
    assert tightness_genus(5, 5) == 103


@pytest.mark.parametrize("gamma,t", [(4, 4), (4, 5), (5, 5), (4, 6), (5, 6), (6, 6), (7, 7)])
def test_tightness_equalities(gamma, t):
    g, chi = tightness_family(gamma, t)
    assert (2 - chi) // 2 == tightness_genus(gamma, t)
    assert bd.order_lower_bound(gamma, chi) == pytest.approx(g.n, abs=1e-9)
    assert bd.gamma_upper_bound(g.n, chi) == pytest.approx(gamma, abs=1e-9)
    assert degree_profile(g).delta >= 4
    if g.n <= 22:
        assert domination_number(g)[0] == gamma


def test_even_split():
    assert even_split(18, 4) == [5, 5, 4, 4]
    assert sum(even_split(29, 5)) == 29


def test_parameter_validation():
    with pytest.raises(FamilyError):
        make_family({"family": "rook", "params": {"n": 1}})
    with pytest.raises(FamilyError):
        make_family({"family": "torus_tri", "params": {"m": 2, "n": 5}})
    with pytest.raises(FamilyError):
        make_family({"family": "torus_tri", "params": {"m": 3}})
    with pytest.raises(FamilyError):
        make_family({"family": "nope"})
    with pytest.raises(FamilyError):
        tightness_family(4, 3)


def test_parse_family_params():
    assert parse_family_params("m=3,n=4") == {"m": 3, "n": 4}
    assert parse_family_params("gamma=4,assignment=1:1:1:1") == {"gamma": 4, "assignment": (1, 1, 1, 1)}
    p = parse_family_params("base=complete:n=6")
    assert p["base"] == FamilySpec("complete", {"n": 6})
    with pytest.raises(FamilyError):
        parse_family_params("m3")
