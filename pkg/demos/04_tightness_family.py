# Graphs that meet the order bound with equality on high-genus surfaces.
from bondage import bounds as bd
from bondage.families import tightness_family, tightness_genus
from bondage.solvers import domination_number

for gamma, t in [(4, 4), (4, 5), (5, 5), (6, 6)]:
    g, chi = tightness_family(gamma, t)
    n_min = bd.order_lower_bound(gamma, chi)
    g_max = bd.gamma_upper_bound(g.n, chi)
    print(f"gamma={gamma} t={t}: n={g.n} m={g.m} genus={tightness_genus(gamma, t)} chi={chi} "
          f"n_min={n_min:.9f} gamma_max={g_max:.9f}")

g, chi = tightness_family(4, 4)
print("exact gamma of the 22-vertex instance:", domination_number(g)[0])
print("edge-maximal:", g.m == bd.sanchis_edge_max(g.n, 4))
