"""Construct every named family once and summarize its invariants.

Each constructor fixes a deterministic labeling, so the same parameters
always give the same Graph value; the graph6 column is the portable way
to hand a specific instance to other tools.
"""

from totecc import FamilySpec, cut_vertices, girth, graph6_encode, pendant_vertices, total_eccentricity

SPECS = [
    FamilySpec("path", (7,)),
    FamilySpec("cycle", (7,)),
    FamilySpec("complete", (7,)),
    FamilySpec("star", (7,)),
    FamilySpec("double_broom", (2, 2, 3)),      # path of 3 with 2+2 pendants
    FamilySpec("spider_balanced", (8, 3)),      # hub with legs 3,2,2
    FamilySpec("double_spider", (8, 3, 1)),     # two hubs, three legs of 2
    FamilySpec("tadpole_l", (7, 3)),            # triangle + pendant path
    FamilySpec("tadpole_p", (7, 4)),            # 4-cycle + pendant bundle
    FamilySpec("dumbbell", (3, 3, 7)),          # two triangles + middle path
    FamilySpec("dumbbell", (4, 4, 7)),          # two 4-cycles at one vertex
    FamilySpec("complete_with_paths", (4, 2, 2, 1, 1)),
    FamilySpec("complete_with_pendants", (7, 2)),
]

print(f"{'family':<34} {'n':>3} {'eps':>4} {'pend':>4} {'cuts':>4} {'girth':>6}  graph6")
for spec in SPECS:
    g = spec.build()
    gi = girth(g)
    print(
        f"{str(spec):<34} {g.n:>3} {total_eccentricity(g):>4} "
        f"{len(pendant_vertices(g)):>4} {len(cut_vertices(g)):>4} "
        f"{str(gi) if gi else 'tree':>6}  {graph6_encode(g)}"
    )
