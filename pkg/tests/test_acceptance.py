"""The fourteen acceptance criteria, each at its stated tolerance and time limit."""
import math
import time

import pytest

from bondage import bounds as bd
from bondage.families import complete, cycle, path, rook, sanchis_p1, sanchis_p2, tightness_family, torus_tri
from bondage.graph import corona, degree_profile
from bondage.harness import CHECKS, corpus_scan, enumeration_corpus
from bondage.solvers import bondage_number, domination_number
from bondage.surfaces import kn_genus

K1 = complete(1)
TABLE1 = [13, 15, 16, 17, 18, 19, 20, 22, 23, 23, 24, 25, 26, 27, 28, 29, 30, 30, 31, 32, 33, 34]
TABLE2 = {2: 8, 1: 8, 0: 9, -1: 10, -2: 12}


def timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


@pytest.fixture(scope="module")
def small_scan():
    """One pass over every connected labelled graph on 1..6 vertices, all checks."""
    rep, secs = timed(corpus_scan, enumeration_corpus(1, 6, True), CHECKS, corpus_id="connected n<=6")
    return {c.name: c for c in rep.checks}, secs, rep.graphs_scanned


def test_c01_corona_k6(criterion):
    g = corona(complete(6), K1)
    r, secs = timed(bondage_number, g)
    e, esecs = timed(bondage_number, g, method="enumerate")
    ok = r.value == e.value == 6 and r.witness == e.witness and secs < 60 and esecs < 60
    criterion(1, ok, f"b(K6oK1) = {r.value} ({r.method} {secs:.2f}s; enumerate {e.value} "
                     f"in {esecs:.2f}s, {e.calls} decision calls)")


def test_c02_rook3(criterion):
    g = rook(3)
    r, secs = timed(bondage_number, g)
    delta = degree_profile(g).Delta
    ok = r.value == 6 and 2 * r.value == 3 * delta and secs < 30
    criterion(2, ok, f"b(K3xK3) = {r.value}, Delta = {delta}, 3/2 Delta = {1.5 * delta} ({secs:.2f}s)")


def test_c03_corona_law(criterion):
    parts, ok = [], True
    for name, h in [("C3", cycle(3)), ("C4", cycle(4)), ("C5", cycle(5)), ("P4", path(4)), ("K4", complete(4))]:
        r, secs = timed(bondage_number, corona(h, K1))
        want = degree_profile(h).delta + 1
        ok &= r.value == want and secs < 5
        parts.append(f"{name}:{r.value}/{want}")
    criterion(3, ok, "b(HoK1) = delta(H)+1: " + " ".join(parts))


def test_c04_complete(criterion):
    parts, ok = [], True
    for n in range(2, 8):
        r, secs = timed(bondage_number, complete(n))
        ok &= r.value == math.ceil(n / 2) and secs < 10
        parts.append(f"K{n}:{r.value}")
    criterion(4, ok, "b(Kn) = ceil(n/2): " + " ".join(parts))


def test_c05_chain(criterion, small_scan):
    checks, secs, total = small_scan
    c = checks["chain"]
    ok = not c.violations and c.undecided == 0 and c.checked == total - 1 and secs < 600
    criterion(5, ok, f"chain b <= B <= B' <= b1 <= 2ad-1 on {c.checked} connected graphs (n=2..6): "
                     f"{len(c.violations)} violations; scan {secs:.1f}s")


def test_c06_tables(criterion):
    t1 = [bd.constant_bound(chi, 1) for chi in range(-2, -24, -1)]
    t2 = {chi: bd.constant_bound(chi, 2) for chi in TABLE2}
    miss = sum(a != b for a, b in zip(t1, TABLE1)) + sum(t2[c] != v for c, v in TABLE2.items())
    criterion(6, miss == 0 and len(t1) == 22, f"gamma>=4 constants (22 entries) and fixed constants (5 entries): {miss} mismatches")


def test_c07_torus(criterion):
    parts, ok = [], True
    for m, n in [(3, 3), (3, 4), (4, 4), (3, 5)]:
        g = torus_tri(m, n)
        bp = bd.degree_based_bounds(g).Bprime
        s = bd.samczech_check(g)
        good = bp == 9 and s.equality and s.p4 and s.b2 == s.Delta + 3
        ok &= good
        parts.append(f"T({m},{n}): B'={bp} b2={s.b2} P4={s.p4}")
    criterion(7, ok, "B' = 9 and b2 = Delta+3 under P4: " + "; ".join(parts))


def test_c08_planar(criterion, small_scan):
    checks, _, _ = small_scan
    c = checks["planar-Bprime-8"]
    criterion(8, not c.violations and c.checked > 0,
              f"B' <= 8 (<= 7 if V5 empty) on {c.checked} connected planar graphs: {len(c.violations)} violations")


def test_c09_order_bound(criterion, small_scan):
    checks, _, _ = small_scan
    c = checks["order-bound"]
    criterion(9, not c.violations and c.checked > 0,
              f"order bound (gamma != 2) and parity bound (gamma = 2) at chi=2 on {c.checked} planar graphs: "
              f"{len(c.violations)} violations")


def test_c10_tightness(criterion):
    (g, chi), secs = timed(tightness_family, 4, 4)
    gamma, gsecs = timed(lambda: domination_number(g)[0])
    nga = bd.order_lower_bound(gamma, chi)
    gan = bd.gamma_upper_bound(g.n, chi)
    ok = (g.n, chi, gamma, g.m) == (22, -148, 4, 171) and g.m == (g.n - 4 + 1) * (g.n - 4) // 2
    ok = ok and abs(nga - g.n) <= 1e-9 and abs(gan - gamma) <= 1e-9 and secs + gsecs < 60
    criterion(10, ok, f"tightness(4,4): n={g.n} chi={chi} gamma={gamma} m={g.m} n_min={nga:.12g} "
                      f"gamma_max={gan:.12g} ({secs + gsecs:.2f}s)")


def test_c11_sanchis(criterion, small_scan):
    checks, _, _ = small_scan
    c = checks["sanchis"]
    instances = [sanchis_p1(4, (1, 1, 1, 1)), sanchis_p1(3, (2, 2, 2)), sanchis_p1(5, (1, 2, 1, 2, 1)),
                 sanchis_p2(8, (2, 1)), sanchis_p2(9, (2, 2)), sanchis_p2(11, (1, 5))]
    tight = 0
    for g in instances:
        gamma = domination_number(g)[0]
        tight += g.m == bd.sanchis_edge_max(g.n, gamma)
    ok = not c.violations and c.checked > 0 and tight == len(instances)
    criterion(11, ok, f"m <= (n-g+1)(n-g)/2 on {c.checked} graphs: {len(c.violations)} violations; "
                      f"P1/P2 equality {tight}/{len(instances)}")


def test_c12_dominance(criterion):
    worst, bad = -math.inf, 0
    for chi in range(-1, -51, -1):
        gz = bd.gz11_bound(chi)
        for gamma in range(2, 21):
            for parity in ("even", "odd") if gamma == 2 else (None,):
                b = bd.domination_chi_bounds(gamma, chi, 3, parity)[1]
                worst = max(worst, b - gz)
                bad += b > gz + 1e-9
    criterion(12, bad == 0, f"domination bound <= GZ11 bound on 50 x 19 grid: {bad} violations, "
                            f"max excess {worst:.4f}")


def test_c13_genus(criterion):
    got = (kn_genus(6)[1], kn_genus(7)[1], kn_genus(8)[0], kn_genus(8)[1])
    criterion(13, got == (1, 3, 2, 4), f"q(K6), q(K7), h(K8), q(K8) = {got}")


def test_c14_conjecture(criterion, small_scan):
    checks, _, total = small_scan
    c = checks["conjecture"]
    ok = not c.violations and c.undecided == 0 and c.checked == total - 1
    criterion(14, ok, f"b <= 3/2 Delta on {c.checked} connected graphs (n=2..6): {len(c.violations)} counterexamples")
