"""One application of each rewrite, with the contracted direction shown.

Rewrites take explicit validated sites and return new graphs; the total
eccentricity delta always has the lemma's sign (strict where the lemma is
strict).  The final section walks a star to the path by repeated grafting
and watches the total climb at each step.
"""

from totecc import Graph, total_eccentricity
from totecc.families import complete, complete_with_paths, star, tadpole_l
from totecc.transforms import (
    BalanceSite,
    add_edge,
    balance_paths,
    block_to_cycle,
    graft_edge,
    graft_sites,
    merge_cycles,
    merge_sites,
    relocate_path,
    relocate_sites,
    shrink_girth_to_3,
    shrink_sites,
)


def show(name, before, after, relation):
    b, a = total_eccentricity(before), total_eccentricity(after)
    ok = {"<=": a <= b, ">=": a >= b, ">": a > b}[relation]
    print(f"  {name:<18} eps {b:>3} -> {a:>3}   (result {relation} input: {ok})")


print("each rewrite once:")

g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
show("add_edge", g, add_edge(g, 0, 3), "<=")

g = star(5)
show("graft_edge", g, graft_edge(g, graft_sites(g)[0]), ">")

# two triangles and a dangling path glued at one vertex
g = Graph.from_edges(7, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (5, 6)])
show("relocate_path", g, relocate_path(g, relocate_sites(g)[0]), ">")

g = complete(5)
show("block_to_cycle", g, block_to_cycle(g, 0), ">=")

# two triangles sharing a vertex, with a 2-vertex host hanging there
g = Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (2, 3), (0, 4), (0, 5), (4, 5), (1, 6)])
show("merge_cycles", g, merge_cycles(g, merge_sites(g)[0]), ">=")

g = complete_with_paths(3, (4, 2, 1))
show("balance_paths", g, balance_paths(g, BalanceSite((0, 1, 2), 0, 2)), "<=")

# a girth-4 tadpole hanging off an edge
base = Graph.from_edges(2, [(0, 1)])
tad = tadpole_l(6, 4)
edges = base.edges() + [(2 + a, 2 + b) for a, b in tad.edges()] + [(0, 7)]
g = Graph.from_edges(8, edges)
show("shrink_girth_to_3", g, shrink_girth_to_3(g, shrink_sites(g)[0]), ">")

print("\ngrafting a star to the path, one strict step at a time:")
g = star(6)
trail = [total_eccentricity(g)]
while sites := graft_sites(g):
    g = graft_edge(g, sites[0])
    trail.append(total_eccentricity(g))
print("  totals:", " -> ".join(map(str, trail)))
print("  fixed point reached: path on", g.n, "vertices")
