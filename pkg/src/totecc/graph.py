"""Immutable simple graphs and their exact invariants.

Vertices are dense ids 0..n-1.  Adjacency is stored as one Python int
bitmask per vertex, which covers both the small-graph fast path and the
n <= 200 formula-check path with a single representation (Python ints are
arbitrary precision).  All distance-based quantities are exact integers;
the average eccentricity is an exact Fraction.

Invariants that presuppose connectivity (eccentricity, Wiener index,
blocks, ...) raise DisconnectedGraphError on disconnected input rather
than returning partial answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

MAX_VERTICES = 200

#: Sentinel distance for vertices unreachable from the BFS source.
UNREACHABLE = -1


class DisconnectedGraphError(ValueError):
    """Raised when an invariant requiring connectivity gets a disconnected graph."""


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency.

    ``adj[v]`` is the neighbor set of ``v`` encoded as an int bitmask.
    Instances are immutable, hashable and safe to share across threads.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighbor mask of vertex {v} references vertices >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list (duplicates collapse, loops rejected)."""
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def relabel(self, perm: tuple[int, ...]) -> "Graph":
        """Return the graph with vertex ``perm[i]`` renamed to ``i``."""
        pos = [0] * self.n
        for i, v in enumerate(perm):
            pos[v] = i
        rows = [0] * self.n
        for i, v in enumerate(perm):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << pos[u]
            rows[i] = row
        return Graph(self.n, tuple(rows))


@dataclass(frozen=True)
class DistanceRow:
    """Hop distances from one source; UNREACHABLE marks other components."""

    source: int
    dist: tuple[int, ...]


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs), cut vertices and block graph.

    ``block_graph`` joins blocks that share a cut vertex; it is None only
    for the single-vertex graph, which has no blocks at all.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_graph: "Graph | None"


def _reach_mask(g: Graph, start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return _reach_mask(g, 0) == (1 << g.n) - 1


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("invariant requires a connected graph")


def bfs_distances(g: Graph, v: int) -> DistanceRow:
    """Exact hop distances from ``v``; disconnected vertices get UNREACHABLE."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    dist[v] = 0
    seen = 1 << v
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~seen
        seen |= frontier
        for u in bits(frontier):
            dist[u] = d
    return DistanceRow(v, tuple(dist))


def distance_matrix(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All-pairs distances via one BFS per vertex."""
    return tuple(bfs_distances(g, v).dist for v in range(g.n))


def eccentricity(g: Graph, v: int) -> int:
    row = bfs_distances(g, v).dist
    if UNREACHABLE in row:
        raise DisconnectedGraphError("eccentricity requires a connected graph")
    return max(row)


def eccentricities(g: Graph) -> tuple[int, ...]:
    """Per-vertex eccentricities (raises on disconnected input)."""
    out = []
    for v in range(g.n):
        row = bfs_distances(g, v).dist
        if UNREACHABLE in row:
            raise DisconnectedGraphError("eccentricity requires a connected graph")
        out.append(max(row))
    return tuple(out)


def total_eccentricity(g: Graph) -> int:
    """Sum of all vertex eccentricities."""
    return sum(eccentricities(g))


def wiener_index(g: Graph) -> int:
    """Sum of distances over unordered vertex pairs."""
    total = 0
    for v in range(g.n):
        row = bfs_distances(g, v).dist
        if UNREACHABLE in row:
            raise DisconnectedGraphError("Wiener index requires a connected graph")
        total += sum(row)
    return total // 2


def average_eccentricity(g: Graph) -> Fraction:
    """Exact rational total_eccentricity(g) / n."""
    return Fraction(total_eccentricity(g), g.n)


def pendant_vertices(g: Graph) -> frozenset[int]:
    """Degree-1 vertices."""
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points via iterative DFS low-points."""
    _require_connected(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts = set()
    timer = 0
    # Iterative Tarjan: each stack frame tracks the neighbor iterator.
    stack = [(0, iter(bits(g.adj[0])))]
    disc[0] = low[0] = timer
    timer += 1
    root_children = 0
    while stack:
        v, it = stack[-1]
        advanced = False
        for u in it:
            if disc[u] == -1:
                parent[u] = v
                disc[u] = low[u] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append((u, iter(bits(g.adj[u]))))
                advanced = True
                break
            elif u != parent[v]:
                if disc[u] < low[v]:
                    low[v] = disc[u]
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != 0 and low[v] >= disc[p]:
                    cuts.add(p)
    if root_children > 1:
        cuts.add(0)
    return frozenset(cuts)


def cut_vertices_by_deletion(g: Graph) -> frozenset[int]:
    """Articulation points by n deletion/connectivity checks (oracle path)."""
    _require_connected(g)
    if g.n == 1:
        return frozenset()
    cuts = set()
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        start = rest[0]
        # BFS in g - v
        seen = 1 << start
        frontier = seen
        banned = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~seen & ~banned
            seen |= frontier
        if seen.bit_count() != g.n - 1:
            cuts.add(v)
    return frozenset(cuts)


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components, cut vertices, and the block graph."""
    _require_connected(g)
    n = g.n
    if n == 1:
        return BlockDecomposition((), frozenset(), None)
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[frozenset[int]] = []
    cuts = set()

    stack = [(0, iter(bits(g.adj[0])))]
    disc[0] = low[0] = timer
    timer += 1
    root_children = 0
    while stack:
        v, it = stack[-1]
        advanced = False
        for u in it:
            if disc[u] == -1:
                parent[u] = v
                disc[u] = low[u] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                edge_stack.append((v, u))
                stack.append((u, iter(bits(g.adj[u]))))
                advanced = True
                break
            elif u != parent[v] and disc[u] < disc[v]:
                edge_stack.append((v, u))
                if disc[u] < low[v]:
                    low[v] = disc[u]
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] >= disc[p]:
                    # p closes a block; pop edges down to (p, v)
                    members = set()
                    while True:
                        e = edge_stack.pop()
                        members.add(e[0])
                        members.add(e[1])
                        if e == (p, v):
                            break
                    raw_blocks.append(frozenset(members))
                    if p != 0:
                        cuts.add(p)
    if root_children > 1:
        cuts.add(0)

    block_list = tuple(sorted(raw_blocks, key=sorted))
    cut_set = frozenset(cuts)
    b = len(block_list)
    bg_edges = [
        (i, j)
        for i in range(b)
        for j in range(i + 1, b)
        if any(w in cut_set for w in block_list[i] & block_list[j])
    ]
    block_graph = Graph.from_edges(b, bg_edges) if b else None
    return BlockDecomposition(block_list, cut_set, block_graph)


def diameter(g: Graph) -> int:
    return max(eccentricities(g))


def radius(g: Graph) -> int:
    return min(eccentricities(g))


def center(g: Graph) -> frozenset[int]:
    """Vertices of minimum eccentricity."""
    eccs = eccentricities(g)
    r = min(eccs)
    return frozenset(v for v in range(g.n) if eccs[v] == r)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for acyclic graphs.

    Every shortest cycle contains each of its edges, so
    min over edges (u,v) of d_{G-uv}(u,v) + 1 is exact.
    """
    _require_connected(g)
    if g.edge_count == g.n - 1:
        return None
    best: int | None = None
    for u, v in g.edges():
        # BFS from u to v in g minus edge (u, v)
        dist = UNREACHABLE
        seen = 1 << u
        frontier = seen
        d = 0
        while frontier and dist == UNREACHABLE:
            d += 1
            nxt = 0
            for w in bits(frontier):
                row = g.adj[w]
                if w == u:
                    row &= ~(1 << v)
                elif w == v:
                    row &= ~(1 << u)
                nxt |= row
            frontier = nxt & ~seen
            seen |= frontier
            if frontier >> v & 1:
                dist = d
        if dist != UNREACHABLE and (best is None or dist + 1 < best):
            best = dist + 1
    return best
