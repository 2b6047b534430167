"""Audit of the open conjecture - including its refutation at order 8.

Conjectured: among connected graphs with s cut vertices, the cycle-plus-
path tadpole U_{n,n-s}^l has the largest total eccentricity.  That holds
exhaustively through n = 7, but at n = 8 with s = 2 three graphs beat the
tadpole; one of them is the two-4-cycles dumbbell C_{4,4}^8.  Violations
come back as structured findings with graph6 witnesses and never crash
the audit.
"""

from totecc import check_conjecture, graph6_decode
from totecc.graph import cut_vertices, eccentricities, total_eccentricity

for n in range(5, 9):
    print(f"== order {n}")
    for v in check_conjecture(n):
        line = (
            f"  s={v.parameter}: tadpole value {v.predicted_value}, "
            f"class max {v.observed_value} -> {v.status}"
        )
        print(line)
        if v.status == "conjecture-violated":
            for s in v.counterexamples:
                g = graph6_decode(s)
                print(
                    f"      counterexample {s}: eps={total_eccentricity(g)}, "
                    f"cuts={len(cut_vertices(g))}, eccs={eccentricities(g)}"
                )
    print()

print("note: with TOTECC_RUN_N9=1 the test suite also audits n = 9, where the")
print("conjecture additionally fails at s = 2 (37 > 36) and s = 3 (43 > 42).")
