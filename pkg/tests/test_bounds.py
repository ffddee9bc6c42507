import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from bondage import bounds as bd
from bondage.families import complete, cube, cycle, icosahedron, rook, torus_tri
from bondage.graph import Graph, cartesian_product, degree_profile, girth, is_connected
from bondage.solvers import HypothesisError, bondage_number
from oracles import graphs

TABLE1 = [13, 15, 16, 17, 18, 19, 20, 22, 23, 23, 24, 25, 26, 27, 28, 29, 30, 30, 31, 32, 33, 34]


def test_degree_bounds_examples():
    c4 = bd.degree_based_bounds(cycle(4))
    assert (c4.b1, c4.b2, c4.b3, c4.B, c4.Bprime) == (3, 3, 3, 3, 3)
    k4 = bd.degree_based_bounds(complete(4))
    assert (k4.b1, k4.b2, k4.b3, k4.B, k4.Bprime) == (5, 3, 3, 3, 3)


def test_degree_bounds_torus():
    # every edge of T(3,3) is in 3 triangles: b2 = 6 + 6 - 1 - 3 = 8
    t = bd.degree_based_bounds(torus_tri(3, 3))
    assert (t.b1, t.b2, t.b3, t.Bprime) == (11, 8, 9, 9)
    # with both sides >= 4 every edge is in exactly 2 triangles
    t = bd.degree_based_bounds(torus_tri(4, 4))
    assert (t.b1, t.b2, t.b3, t.Bprime) == (11, 9, 9, 9)


def test_degree_bounds_need_an_edge():
    with pytest.raises(ValueError):
        bd.degree_based_bounds(Graph.empty(3))


@settings(max_examples=200)
@given(graphs(min_n=2, max_n=9))
def test_degree_bounds_invariants(g):
    if g.m == 0:
        return
    db = bd.degree_based_bounds(g)
    assert db.B == min(db.b1, db.b2) and db.Bprime == min(db.b1, db.b3)
    assert db.b2 <= db.b3 and db.B <= db.Bprime
    if girth(g) > 3:
        assert db.B == db.Bprime == db.b1
    if is_connected(g):
        assert db.b1 <= 2 * degree_profile(g).ad - 1


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=7, connected=True))
def test_chain(g):
    db = bd.degree_based_bounds(g)
    b = bondage_number(g).value
    assert b <= db.B <= db.Bprime <= db.b1 <= 2 * degree_profile(g).ad - 1


def test_euler_edge_ad_examples():
    assert bd.euler_edge_ad_bounds(10, 3, 2).edge_max == 24
    eb = bd.euler_edge_ad_bounds(12, 3, -1)
    assert eb.sgz_bondage == pytest.approx(12.0, abs=1e-9)
    assert bd.euler_edge_ad_bounds(12, 4, -1).ad_max == Fraction(13, 3)
    assert bd.euler_edge_ad_bounds(12, math.inf, -1) == bd.EulerBounds(None, None, None)


def test_gz11_examples():
    assert bd.gz11_bound(-1) == pytest.approx(14.0, abs=1e-9)
    assert bd.gz11_bound(-2) == pytest.approx(11 + 2 * (math.sqrt(33) - 3), abs=1e-9)
    assert bd.gz11_bound(-8) == pytest.approx(27.0, abs=1e-9)
    with pytest.raises(bd.InapplicableError):
        bd.gz11_bound(0)


def test_domination_chi_examples():
    assert bd.domination_chi_bounds(2, -1, 3, "even")[1] == pytest.approx(11 + 12 / (2 + math.sqrt(8)), abs=1e-9)
    assert bd.domination_chi_bounds(4, -1, 3)[1] == pytest.approx(12.5, abs=1e-9)
    assert bd.domination_chi_bounds(3, -2, 3)[1] == pytest.approx(11 + 48 / 14, abs=1e-9)
    with pytest.raises(ValueError):
        bd.domination_chi_bounds(2, -1, 3)


def test_dominance_grid():
    for chi in range(-1, -51, -1):
        gz = bd.gz11_bound(chi)
        for gamma in range(2, 21):
            for parity in ("even", "odd"):
                ad, b = bd.domination_chi_bounds(gamma, chi, 3, parity)
                assert b == pytest.approx(2 * ad - 1)
                assert b <= gz + bd.EPS


def test_order_examples():
    assert bd.order_lower_bound(4, 2) == pytest.approx(7.0, abs=1e-9)
    assert bd.order_lower_bound(2, 0, "even") == pytest.approx(2 + math.sqrt(6), abs=1e-9)
    assert bd.order_lower_bound(4, -148) == pytest.approx(22.0, abs=1e-9)
    assert bd.gamma_upper_bound(22, -148) == pytest.approx(4.0, abs=1e-9)


def test_sanchis_examples():
    assert bd.sanchis_edge_max(8, 4) == 10
    assert bd.sanchis_edge_max(10, 3) == 28
    assert bd.sanchis_edge_max(6, 3) == 6
    with pytest.raises(HypothesisError):
        bd.sanchis_edge_max(6, 4)


def test_delta_max_examples():
    assert bd.delta_max(2) == 5
    assert bd.delta_max(1) == 5
    assert bd.delta_max(0) == 6
    assert bd.delta_max(-1) == 6


def test_delta_max_is_floor_of_closed_form():
    for chi in range(-40, 1):
        d = bd.delta_max(chi)
        assert d <= (5 + math.sqrt(49 - 24 * chi)) / 2 < d + 1


def test_tables():
    assert [bd.constant_bound(c, 1) for c in range(-2, -24, -1)] == TABLE1
    assert [bd.constant_bound(c, 2) for c in (2, 1, 0, -1, -2)] == [8, 8, 9, 10, 12]
    assert bd.constant_bound(-10) == 23
    assert bd.constant_bound(-23) == 34
    assert bd.constant_bound(0) == 9
    assert bd.constant_bound(-2, 1) == 13


def test_table1_flooring_guard():
    # chi = -10 and -23 hit integers exactly; flooring must not drop them
    assert 11 - 24 * -10 / (9 + math.sqrt(41 + 80)) == pytest.approx(23)
    assert bd.floor_eps(23 - 1e-12) == 23


def test_teschner_examples():
    assert bd.teschner_bound(1, 3, t=4) == 2
    assert bd.teschner_bound(2, 5) == 6
    assert bd.teschner_bound(3, 4) == 6
    with pytest.raises(bd.InapplicableError):
        bd.teschner_bound(4, 4)


def test_s_vertex_icosahedron():
    r = bd.s_vertex_condition(icosahedron(), 5, 2, beta0_Vs=3)
    assert (r.lhs, r.rhs, r.holds, r.implied_bound) == (-28, 3, True, 8)
    assert r.corollaries["pet-i"].holds


def test_s_vertex_torus():
    r = bd.s_vertex_condition(torus_tri(3, 3), 6, 0, beta0_Vs=3)
    assert (r.lhs, r.rhs, r.holds, r.implied_bound) == (0, 24, True, 10)
    assert bd.s_vertex_condition(torus_tri(3, 3), 6, 0).note == "beta0(<V_6>) = 3"


def test_s_vertex_evaluated_not_assumed():
    # 4-regular on 30 vertices: at s=4 the term 2(s-5)n is -2n and the condition fails
    g = cartesian_product(cycle(10), cycle(3))
    r = bd.s_vertex_condition(g, 4, 2)
    assert r.rhs == -2 * g.n and not r.holds
    with pytest.raises(HypothesisError):
        bd.s_vertex_condition(cycle(5), 4, 2)


def test_deltamax_examples():
    r = bd.deltamax_condition(cube(), 2)
    assert r.applicable and r.implied_bound == 7
    assert bd.degree_based_bounds(cube()).Bprime <= 7
    g = cartesian_product(cycle(4), cycle(4))  # 4-regular toroidal
    r = bd.deltamax_condition(g, 0)
    assert r.applicable and r.implied_bound == 9
    assert not bd.deltamax_condition(icosahedron(), 2).applicable


def test_samczech_examples():
    g = cartesian_product(cycle(4), cycle(4))
    r = bd.samczech_check(g)
    assert (r.b2, r.equality, r.p3, r.p4) == (7, True, True, False)
    r = bd.samczech_check(complete(5))
    assert (r.b2, r.holds, r.equality) == (4, True, False)
    r = bd.samczech_check(torus_tri(4, 4))
    assert (r.b2, r.equality, r.p4) == (9, True, True)
    r = bd.samczech_check(torus_tri(3, 3))
    assert (r.b2, r.equality, r.p4) == (8, False, False)


@pytest.mark.parametrize("m,n", [(3, 3), (3, 4), (3, 5), (4, 3), (4, 4), (4, 5), (5, 5)])
def test_samczech_torus_consistent(m, n):
    r = bd.samczech_check(torus_tri(m, n))
    assert r.holds and r.consistent
    assert bd.degree_based_bounds(torus_tri(m, n)).Bprime == 9


def test_toroidal_ratio():
    assert bd.toroidal_ratio_check(rook(3), 6)
    assert bd.toroidal_ratio_check(torus_tri(4, 4), 9)


def test_bounds_report_hypotheses_recorded():
    rep = bd.bounds_report(torus_tri(4, 4), chi=0, certified_by="by-construction")
    d = rep.to_dict()
    assert d["degree_bounds"]["Bprime"] == 9
    applicable = [b for b in rep.chi_bounds if b.applicable]
    assert applicable and all(b.hypothesis for b in applicable)
    assert all(b.satisfied is not False for b in rep.chi_bounds)
    const = next(b for b in rep.chi_bounds if b.name == "constant")
    assert const.value == 9 and const.observed == 9


def test_bounds_report_disconnected_marks_inapplicable():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    rep = bd.bounds_report(g, chi=-1)
    assert not any(b.applicable for b in rep.chi_bounds if b.name in ("gz11", "order", "constant"))
