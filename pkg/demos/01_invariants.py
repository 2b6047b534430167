"""Tour of the exact graph invariants on a pair of 5-vertex graphs.

The two graphs below are a classic illustration that the Wiener index and
the total eccentricity index can pull in opposite directions: the first
graph has the smaller Wiener index but the larger eccentricity total.
"""

from totecc import (
    Graph,
    average_eccentricity,
    bfs_distances,
    blocks,
    center,
    cut_vertices,
    diameter,
    eccentricities,
    girth,
    pendant_vertices,
    radius,
    total_eccentricity,
    wiener_index,
)

g1 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 2), (1, 3)])
g2 = Graph.from_edges(5, [(2, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 2)])  # bowtie

for name, g in (("G1", g1), ("G2 (bowtie)", g2)):
    print(f"== {name}: {g.n} vertices, edges {g.edges()}")
    print("   distances from 0:", bfs_distances(g, 0).dist)
    print("   eccentricities:  ", eccentricities(g))
    print("   total ecc:", total_eccentricity(g), " Wiener:", wiener_index(g))
    print("   average ecc:", average_eccentricity(g), "(exact rational)")
    print("   diameter:", diameter(g), " radius:", radius(g), " center:", sorted(center(g)))
    print("   girth:", girth(g), " pendants:", sorted(pendant_vertices(g)),
          " cut vertices:", sorted(cut_vertices(g)))
    decomp = blocks(g)
    print("   blocks:", [sorted(b) for b in decomp.blocks])
    print()

print("W(G1) < W(G2):", wiener_index(g1) < wiener_index(g2))
print("eps(G1) > eps(G2):", total_eccentricity(g1) > total_eccentricity(g2))
