"""Graph rewrites with inequality contracts on the total eccentricity.

Each operation takes an explicit, strictly validated site; an invalid
site raises InvalidSiteError rather than degrading to a no-op.  Rewrites
return new graphs (inputs are never mutated) and preserve vertex count
and connectivity.  Companion ``*_sites`` helpers enumerate every valid
site of a graph deterministically (sorted by anchor ids) for harness use.

Contracts (checked by the randomized property suite):
  add_edge            eps never increases (per vertex, hence in total)
  graft_edge          eps strictly increases
  relocate_path       eps strictly increases
  block_to_cycle      eps does not decrease
  merge_cycles        eps does not decrease
  balance_paths       eps does not increase
  shrink_girth_to_3   eps strictly increases
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits, blocks, is_connected


class InvalidSiteError(ValueError):
    """The site does not match the rewrite's structural precondition."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidSiteError(msg)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Join two non-adjacent vertices; total eccentricity can only drop."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex out of range for n={g.n}")
    _require(u != v, "cannot add a self-loop")
    _require(not g.has_edge(u, v), f"vertices {u} and {v} are already adjacent")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def _dangling_path(g: Graph, hub: int, first: int) -> tuple[int, ...] | None:
    """The dangling path starting hub -> first, or None if it branches/cycles."""
    chain = [first]
    prev, cur = hub, first
    while g.degree(cur) == 2:
        nxt = next(u for u in bits(g.adj[cur]) if u != prev)
        if nxt == hub:
            return None
        prev, cur = cur, nxt
        chain.append(cur)
    if g.degree(cur) != 1:
        return None
    return tuple(chain)


@dataclass(frozen=True)
class GraftSite:
    """Hub with two dangling paths, listed hub-outward, shorter first."""

    hub: int
    short_path: tuple[int, ...]
    long_path: tuple[int, ...]


def graft_edge(g: Graph, site: GraftSite) -> Graph:
    """Move the shorter path's end vertex to extend the longer path.

    With path lengths 1 <= k <= l this removes the last edge of the short
    path and re-attaches its end to the long path's end, producing the
    (k-1, l+1) configuration; the total eccentricity strictly increases.
    """
    _require(is_connected(g), "graft site requires a connected graph")
    h, short, long_ = site.hub, site.short_path, site.long_path
    k, l = len(short), len(long_)
    _require(k >= 1, "short path must have length >= 1")
    _require(k <= l, "short path must not be longer than the long path")
    verts = {h, *short, *long_}
    _require(len(verts) == 1 + k + l, "site paths overlap")
    _require(
        g.has_edge(h, short[0]) and _dangling_path(g, h, short[0]) == short,
        "short path is not a dangling path at the hub",
    )
    _require(
        g.has_edge(h, long_[0]) and _dangling_path(g, h, long_[0]) == long_,
        "long path is not a dangling path at the hub",
    )
    _require(g.n - k - l >= 2, "base graph must keep at least 2 vertices")
    tail = short[-1]
    before = short[-2] if k >= 2 else h
    rows = list(g.adj)
    rows[before] &= ~(1 << tail)
    rows[tail] &= ~(1 << before)
    rows[long_[-1]] |= 1 << tail
    rows[tail] |= 1 << long_[-1]
    return Graph(g.n, tuple(rows))


def graft_sites(g: Graph) -> list[GraftSite]:
    """All valid graft sites, sorted by (hub, path anchors)."""
    sites = []
    for h in range(g.n):
        paths = []
        for a in sorted(bits(g.adj[h])):
            p = _dangling_path(g, h, a)
            if p is not None:
                paths.append(p)
        for p, q in combinations(paths, 2):
            if (len(p), p) > (len(q), q):
                p, q = q, p
            if g.n - len(p) - len(q) >= 2:
                sites.append(GraftSite(h, p, q))
    return sites


@dataclass(frozen=True)
class RelocateSite:
    """Decomposition of g into H1, H2 and a dangling path glued at one vertex.

    ``path`` lists the pendant path from the center outward (the lemma's
    v_2..v_d); ``side`` holds the H1 vertices other than the center.
    """

    center: int
    path: tuple[int, ...]
    side: frozenset[int]


def relocate_path(g: Graph, site: RelocateSite) -> Graph:
    """Re-glue the path between H1 and H2 so the three parts run in series.

    The total eccentricity strictly increases, and no vertex of H1 or H2
    loses eccentricity.  Relocated path vertices CAN lose eccentricity
    (their far side may flip), so only the aggregate is contracted.
    """
    _require(is_connected(g), "relocate site requires a connected graph")
    c, p, side = site.center, site.path, site.side
    _require(len(p) >= 1, "path must contribute at least one vertex")
    _require(
        g.has_edge(c, p[0]) and _dangling_path(g, c, p[0]) == p,
        "path is not a dangling path at the center",
    )
    rest = set(range(g.n)) - {c} - set(p) - side
    _require(side and rest, "both sides must be nonempty")
    _require(c not in side and not (side & set(p)), "side overlaps center or path")
    for v in side:
        _require(not (g.adj[v] & _mask(rest)), "side and remainder are joined away from the center")
    tail = p[-1]
    rows = list(g.adj)
    for h in sorted(rest & set(bits(g.adj[c]))):
        rows[c] &= ~(1 << h)
        rows[h] &= ~(1 << c)
        rows[tail] |= 1 << h
        rows[h] |= 1 << tail
    out = Graph(g.n, tuple(rows))
    _require(is_connected(out), "site did not split at the center as required")
    return out


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def relocate_sites(g: Graph) -> list[RelocateSite]:
    """All valid relocations, sorted by (center, path, side)."""
    sites: list[RelocateSite] = []
    if not is_connected(g):
        return sites
    for c in range(g.n):
        comps = _components_without(g, c)
        if len(comps) < 3:
            continue
        for pi, comp in enumerate(comps):
            nbrs_in = sorted(set(bits(g.adj[c])) & comp)
            if len(nbrs_in) != 1:
                continue
            p = _dangling_path(g, c, nbrs_in[0])
            if p is None or set(p) != comp:
                continue
            others = [cc for ci, cc in enumerate(comps) if ci != pi]
            # Unordered bipartitions of the other components into two
            # nonempty groups; pinning others[0] to the side avoids
            # emitting each split twice.
            for extra_count in range(len(others) - 1):
                for extra in combinations(range(1, len(others)), extra_count):
                    side = frozenset(others[0]).union(*(others[i] for i in extra))
                    sites.append(RelocateSite(c, p, side))
    return sites


def _components_without(g: Graph, v: int) -> list[set[int]]:
    """Connected components of g - v, ordered by smallest member."""
    banned = 1 << v
    todo = ((1 << g.n) - 1) & ~banned
    comps = []
    while todo:
        start = (todo & -todo).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~seen & ~banned
            seen |= frontier
        comps.append(set(bits(seen)))
        todo &= ~seen
    return sorted(comps, key=min)


def block_to_cycle(g: Graph, block_index: int) -> Graph:
    """Replace one block by a cycle on the same vertices.

    The block must have r >= 3 vertices and contain at most one of g's cut
    vertices; that cut vertex (the block's attachment) is preserved, so
    the rest of the graph is untouched.  Total eccentricity cannot drop.
    """
    decomp = blocks(g)
    if not 0 <= block_index < len(decomp.blocks):
        raise ValueError(f"block index {block_index} out of range")
    block = decomp.blocks[block_index]
    r = len(block)
    _require(r >= 3, "block must have at least 3 vertices")
    cuts_in = sorted(block & decomp.cut_vertices)
    _require(len(cuts_in) <= 1, "block touches more than one cut vertex")
    if cuts_in:
        ring = cuts_in + sorted(block - {cuts_in[0]})
    else:
        ring = sorted(block)
    keep = [(u, v) for u, v in g.edges() if not (u in block and v in block)]
    ring_edges = [(ring[i], ring[(i + 1) % r]) for i in range(r)]
    return Graph.from_edges(g.n, keep + ring_edges)


def block_cycle_sites(g: Graph) -> list[int]:
    """Indices of blocks eligible for block_to_cycle."""
    decomp = blocks(g)
    return [
        i
        for i, b in enumerate(decomp.blocks)
        if len(b) >= 3 and len(b & decomp.cut_vertices) <= 1
    ]


@dataclass(frozen=True)
class MergeCyclesSite:
    """Two cycle blocks meeting at one shared vertex."""

    shared: int
    cycle_a: frozenset[int]
    cycle_b: frozenset[int]


def _cycle_walk(g: Graph, block: frozenset[int], start: int) -> list[int]:
    """Vertices of a cycle block in ring order from start, smaller neighbor first."""
    inside = _mask(block)
    first = min(bits(g.adj[start] & inside))
    order = [start, first]
    prev, cur = start, first
    while True:
        nxt = next(u for u in bits(g.adj[cur] & inside) if u != prev)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _is_cycle_block(g: Graph, block: frozenset[int]) -> bool:
    inside = _mask(block)
    return len(block) >= 3 and all((g.adj[v] & inside).bit_count() == 2 for v in block)


def merge_cycles(g: Graph, site: MergeCyclesSite) -> Graph:
    """Fuse two cycles sharing a vertex into one longer cycle through it.

    C_{m1} and C_{m2} at w become C_{m1+m2-1}; the vertex set is unchanged
    and the total eccentricity cannot drop (the rest of the graph needs at
    least one vertex besides w).
    """
    decomp = blocks(g)
    w, ca, cb = site.shared, site.cycle_a, site.cycle_b
    _require(ca in decomp.blocks and cb in decomp.blocks, "anchors are not blocks of the graph")
    _require(ca != cb, "the two cycles must be distinct blocks")
    _require(w in ca and w in cb, "shared vertex must lie in both cycles")
    _require(_is_cycle_block(g, ca) and _is_cycle_block(g, cb), "blocks are not cycles")
    rest = g.n - (len(ca) - 1) - (len(cb) - 1)
    _require(rest >= 2, "remainder graph must keep at least 2 vertices")
    ring_a = _cycle_walk(g, ca, w)
    ring_b = _cycle_walk(g, cb, w)
    rows = list(g.adj)
    for x, y in ((ring_a[-1], w), (ring_b[-1], w)):
        rows[x] &= ~(1 << y)
        rows[y] &= ~(1 << x)
    x, y = ring_a[-1], ring_b[-1]
    rows[x] |= 1 << y
    rows[y] |= 1 << x
    return Graph(g.n, tuple(rows))


def merge_sites(g: Graph) -> list[MergeCyclesSite]:
    """All pairs of cycle blocks meeting at a vertex, sorted by anchors."""
    decomp = blocks(g)
    sites = []
    for i, j in combinations(range(len(decomp.blocks)), 2):
        bi, bj = decomp.blocks[i], decomp.blocks[j]
        shared = bi & bj
        if len(shared) != 1:
            continue
        if not (_is_cycle_block(g, bi) and _is_cycle_block(g, bj)):
            continue
        if g.n - (len(bi) - 1) - (len(bj) - 1) >= 2:
            sites.append(MergeCyclesSite(min(shared), bi, bj))
    return sites


@dataclass(frozen=True)
class BalanceSite:
    """Clique of a clique-with-paths graph plus donor/receiver path indices."""

    clique: tuple[int, ...]
    donor: int
    receiver: int


def _kmn_profile(g: Graph, clique: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Decompose g as clique-with-paths; returns per-root outward paths.

    Raises InvalidSiteError when g is not of that form for this clique.
    """
    m = len(clique)
    _require(m >= 2 and len(set(clique)) == m, "clique must list distinct vertices")
    for u, v in combinations(clique, 2):
        _require(g.has_edge(u, v), "clique vertices must be pairwise adjacent")
    cmask = _mask(clique)
    paths = []
    covered = set(clique)
    for v in clique:
        out = g.adj[v] & ~cmask
        _require(out.bit_count() <= 1, "clique vertex roots more than one path")
        if out == 0:
            paths.append((v,))
            continue
        p = _dangling_path(g, v, out.bit_length() - 1)
        _require(p is not None, "attachment at a clique vertex is not a dangling path")
        paths.append((v, *p))
        covered.update(p)
    _require(len(covered) == g.n, "graph has vertices outside the clique-with-paths form")
    return paths


def balance_paths(g: Graph, site: BalanceSite) -> Graph:
    """Move one vertex from the longest path to a path shorter by >= 2.

    Applies only to clique-with-paths graphs; the donor must carry a
    maximum-length path.  Total eccentricity does not increase (and is
    unchanged when the clique is a single edge, where both sides are
    paths).
    """
    _require(is_connected(g), "balance site requires a connected graph")
    paths = _kmn_profile(g, site.clique)
    m = len(paths)
    _require(0 <= site.donor < m and 0 <= site.receiver < m, "path index out of range")
    _require(site.donor != site.receiver, "donor and receiver must differ")
    lengths = [len(p) for p in paths]
    _require(lengths[site.donor] == max(lengths), "donor must carry a maximum-length path")
    _require(
        lengths[site.receiver] <= lengths[site.donor] - 2,
        "receiver path must be shorter by at least 2",
    )
    donor_path = paths[site.donor]
    tail, before = donor_path[-1], donor_path[-2]
    rows = list(g.adj)
    rows[before] &= ~(1 << tail)
    rows[tail] &= ~(1 << before)
    recv_end = paths[site.receiver][-1]
    rows[recv_end] |= 1 << tail
    rows[tail] |= 1 << recv_end
    return Graph(g.n, tuple(rows))


def balance_sites(g: Graph) -> list[BalanceSite]:
    """All valid balance sites over recognizable cliques, sorted by anchors."""
    if not is_connected(g):
        return []
    decomp = blocks(g)
    candidates: list[tuple[int, ...]] = []
    big = [b for b in decomp.blocks if len(b) >= 3]
    if len(big) == 1:
        b = big[0]
        if all(g.has_edge(u, v) for u, v in combinations(sorted(b), 2)):
            candidates.append(tuple(sorted(b)))
    elif not big:
        candidates.extend((u, v) for u, v in g.edges())
    sites = []
    for clique in candidates:
        try:
            paths = _kmn_profile(g, clique)
        except InvalidSiteError:
            continue
        lengths = [len(p) for p in paths]
        top = max(lengths)
        for k, lk in enumerate(lengths):
            if lk != top:
                continue
            for j, lj in enumerate(lengths):
                if j != k and lj <= top - 2:
                    sites.append(BalanceSite(clique, k, j))
    return sites


@dataclass(frozen=True)
class ShrinkSite:
    """Edge from a host vertex to the pendant of an attached tadpole."""

    attach: int
    pendant: int


def shrink_girth_to_3(g: Graph, site: ShrinkSite) -> Graph:
    """Shrink an attached tadpole's cycle from g >= 4 down to a triangle.

    The tadpole's vertices are renumbered along its path-then-cycle walk
    and rebuilt as a maximal path ending in a triangle, exactly mirroring
    the comparison that proves the strict increase in total eccentricity.
    """
    _require(is_connected(g), "shrink site requires a connected graph")
    u, p = site.attach, site.pendant
    _require(g.has_edge(u, p), "attach vertex and pendant must be adjacent")
    comps = _split_on_edge(g, u, p)
    _require(comps is not None, "edge between host and tadpole must be a bridge")
    host, tad = comps
    _require(len(host) >= 2, "host side must keep at least 2 vertices")
    order = _tadpole_order(g, tad, p)
    _require(order is not None, "component is not a path-form tadpole")
    walk, girth_len = order
    _require(girth_len >= 4, "tadpole girth must be at least 4")
    r = len(walk)
    keep = [(a, b) for a, b in g.edges() if not (a in tad and b in tad)]
    new = [(walk[i], walk[i + 1]) for i in range(r - 3)]
    new += [(walk[r - 3], walk[r - 2]), (walk[r - 2], walk[r - 1]), (walk[r - 1], walk[r - 3])]
    return Graph.from_edges(g.n, keep + new)


def _split_on_edge(g: Graph, u: int, p: int) -> tuple[set[int], set[int]] | None:
    """Components (host side of u, tadpole side of p) of g minus edge up."""
    seen = 1 << p
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            row = g.adj[v]
            if v == p:
                row &= ~(1 << u)
            nxt |= row
        frontier = nxt & ~seen
        seen |= frontier
    if seen >> u & 1:
        return None
    tad = set(bits(seen))
    return set(range(g.n)) - tad, tad


def _tadpole_order(g: Graph, tad: set[int], p: int) -> tuple[list[int], int] | None:
    """Path-then-cycle vertex order of a tadpole component, or None."""
    inside = _mask(tad)
    deg = {v: (g.adj[v] & inside).bit_count() for v in tad}
    edges_in = sum(deg.values()) // 2
    if edges_in != len(tad) or deg[p] != 1:
        return None
    walk = [p]
    prev, cur = None, p
    while deg[cur] <= 2:
        nbrs = [x for x in bits(g.adj[cur] & inside) if x != prev]
        if len(nbrs) != 1:
            return None
        prev, cur = cur, nbrs[0]
        walk.append(cur)
    if deg[cur] != 3:
        return None
    ring = set(tad) - set(walk[:-1])
    if not all(deg[v] == 2 for v in ring - {cur}):
        return None
    ring_order = _cycle_walk(g, frozenset(ring), cur)
    if len(ring_order) != len(ring):
        return None
    return walk[:-1] + ring_order, len(ring)


def shrink_sites(g: Graph) -> list[ShrinkSite]:
    """All valid tadpole-shrinking sites, sorted by (attach, pendant)."""
    if not is_connected(g):
        return []
    sites = []
    for u, v in g.edges():
        for attach, pend in ((u, v), (v, u)):
            comps = _split_on_edge(g, attach, pend)
            if comps is None or len(comps[0]) < 2:
                continue
            order = _tadpole_order(g, comps[1], pend)
            if order is not None and order[1] >= 4:
                sites.append(ShrinkSite(attach, pend))
    return sorted(sites, key=lambda s: (s.attach, s.pendant))
