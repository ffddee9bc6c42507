# Bondage numbers of a few classic graphs, computed exactly.
from bondage import bondage_number, domination_number
from bondage.families import complete, cycle, path, rook
from bondage.graph import corona

K1 = complete(1)

# Complete graphs: b(K_n) = ceil(n/2)
for n in range(2, 8):
    r = bondage_number(complete(n))
    print(f"K{n}: gamma={r.gamma} b={r.value} witness={r.witness}")

# Coronas H o K1 have gamma = |H|; their bondage number is delta(H) + 1
for name, h in [("C4", cycle(4)), ("P4", path(4)), ("K4", complete(4))]:
    g = corona(h, K1)
    print(name, "o K1:", "gamma =", domination_number(g)[0], " b =", bondage_number(g).value)

# The rook graph K3 x K3 is 4-regular and meets b = 3/2 * Delta
r = bondage_number(rook(3))
print("K3 x K3: b =", r.value, "via", r.method, "with", r.calls, "search nodes")

# Both exact routes agree, including on the witness
g = corona(complete(6), K1)
fast = bondage_number(g, method="cover")
slow = bondage_number(g, method="enumerate")
print("K6 o K1:", fast.value, slow.value, fast.witness == slow.witness, slow.calls, "decision calls")
