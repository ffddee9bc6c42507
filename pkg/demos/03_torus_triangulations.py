# Six-regular triangulations of the torus and the b2 <= Delta + 3 bound.
from bondage import bounds as bd
from bondage.families import torus_tri
from bondage.graph import edge_triangles

for m, n in [(3, 3), (3, 4), (4, 4), (4, 5), (5, 5)]:
    g = torus_tri(m, n)
    tri = sorted({edge_triangles(g, u, v) for u, v in g.edges})
    s = bd.samczech_check(g)
    db = bd.degree_based_bounds(g)
    print(f"T({m},{n}) n={g.n} m={g.m} triangles/edge={tri} b2={s.b2} B'={db.Bprime} P4={s.p4} equality={s.equality}")

# With a side of length 3 the wrap-around line closes into a triangle,
# so edges on it lie in three triangles: P4 fails and b2 drops to 8.
# B' stays 9 because b3 = max(b2, 2*6 - 3) = 9 either way.
g = torus_tri(3, 3)
print("T(3,3) row 0 is a triangle:", g.has_edge(0, 3) and g.has_edge(3, 6) and g.has_edge(0, 6))
