# Every property check over all connected labelled graphs on up to five vertices.
from bondage.harness import CHECKS, corpus_scan, enumeration_corpus

rep = corpus_scan(enumeration_corpus(1, 5, connected_only=True), CHECKS, corpus_id="connected n<=5")
print(rep.graphs_scanned, "graphs;", rep.chi_source)
for c in rep.checks:
    print(f"  {c.name:<16} checked={c.checked:<5} skipped={c.skipped:<5} violations={len(c.violations)}")

# n = 6 (26704 more graphs) takes about 20 s; `bondage scan --enumerate 6` runs it
