# Searching for large bondage numbers on low-genus surfaces.
# A search can only exhibit examples; it never settles a question negatively.
from bondage.families import complete, torus_tri
from bondage.graph import corona
from bondage.harness import counterexample_search

K1 = complete(1)
cases = [
    ("q1", [corona(complete(6), K1)]),  # K6 embeds in the projective plane
    ("q2-torus", [corona(torus_tri(3, 3), K1)]),
    ("q3", [corona(complete(7), K1)]),  # K7 embeds in N3
]
for q, corpus in cases:
    f = counterexample_search(corpus, q)
    print(f.text)
    print(f"  targets {f.targets}: max b found = {f.max_bondage}; hits = {len(f.hits)}")
    for e in f.entries:
        print(f"    {e.graph6}: {e.status} b={e.value} B'={e.Bprime} ({e.runtime_ms} ms)")
    print("  " + f.statement)

# Too big for an exact answer within budget: reported with B' only, never guessed.
# T(4,4) o K1 has 2^16 minimum dominating sets, so only subset enumeration applies.
f = counterexample_search([corona(torus_tri(4, 4), K1)], "q2-torus", budget=2000)
e = f.entries[0]
print("T(4,4) o K1:", e.status, "B' =", e.Bprime)
