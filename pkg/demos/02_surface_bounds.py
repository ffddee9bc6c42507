# Constant bounds by Euler characteristic, and what they say about real graphs.
from bondage import bounds as bd
from bondage.families import icosahedron, torus_tri

print("chi  g>=4    GZ11   fixed")
for chi in (2, 1, 0, -1, -2, -5, -10, -23):
    t1 = bd.constant_bound(chi, 1) if chi <= -2 else ""
    gz = f"{bd.gz11_bound(chi):.3f}" if chi <= -1 else ""
    t2 = bd.TABLE2.get(chi, "")
    print(f"{chi:>4} {t1!s:>6} {gz:>7} {t2!s:>6}")

# The domination-aware bound beats the older one for every gamma >= 2
chi = -5
for gamma in (2, 3, 4, 8):
    b = bd.domination_chi_bounds(gamma, chi, 3, "even")[1]
    print(f"chi={chi} gamma={gamma}: {b:.3f} < {bd.gz11_bound(chi):.3f}")

# The icosahedron is 5-regular and planar: the degree-5 condition gives B' <= 8
ico = icosahedron()
c = bd.s_vertex_condition(ico, 5, chi=2)
print("icosahedron:", c.lhs, "<", c.rhs, "->", c.holds, " B' =", bd.degree_based_bounds(ico).Bprime)

# A full report lists every bound with its hypothesis and certification
rep = bd.bounds_report(torus_tri(4, 4), chi=0, certified_by="by-construction")
for b in rep.chi_bounds:
    if b.applicable:
        print(f"  {b.name:<14} {b.value!s:<20} observed={b.observed}")
