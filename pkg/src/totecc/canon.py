"""Exact canonical labeling by partition refinement and backtracking.

canonical_form(g) returns equal bytes for two graphs iff they are
isomorphic.  The search individualizes vertices of a refined ordered
partition, keeps the lexicographically largest relabeled adjacency code
over all explored leaves, and records every automorphism discovered when
two leaves tie.  Siblings lying in one orbit of the already-discovered,
path-fixing automorphisms are pruned, which keeps vertex-transitive
graphs (cycles, complete graphs) at polynomially many leaves.

Exactness is required downstream (witness counting), so this is a full
canonicalizer, not a hash.  Performance is tuned for n <= 9 enumeration;
the hard cap is n <= 64.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits

MAX_CANON_VERTICES = 64


@dataclass(frozen=True)
class CanonResult:
    """Canonical form plus the labeling, orbits and generators behind it.

    labeling[i] is the original vertex placed at canonical position i.
    orbits[v] is the smallest vertex in v's automorphism orbit.
    """

    form: bytes
    labeling: tuple[int, ...]
    orbits: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _refine(adj: tuple[int, ...], cells: list[int], splitters: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition (1-dim WL).

    Splits every multi-vertex cell by neighbor counts into the splitter
    masks, new sub-cells ordered by ascending count.  The procedure is
    label-equivariant, which is all canonicity requires.
    """
    queue = list(splitters)
    qi = 0
    while qi < len(queue):
        splitter = queue[qi]
        qi += 1
        out: list[int] = []
        for cell in cells:
            if cell.bit_count() == 1:
                out.append(cell)
                continue
            buckets: dict[int, int] = {}
            for v in bits(cell):
                key = (adj[v] & splitter).bit_count()
                buckets[key] = buckets.get(key, 0) | (1 << v)
            if len(buckets) == 1:
                out.append(cell)
            else:
                parts = [buckets[k] for k in sorted(buckets)]
                out.extend(parts)
                queue.extend(parts)
        cells = out
    return cells


def _leaf_code(n: int, adj: tuple[int, ...], perm: tuple[int, ...], nbytes: int) -> bytes:
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    chunks = []
    for v in perm:
        row = 0
        for u in bits(adj[v]):
            row |= 1 << pos[u]
        chunks.append(row.to_bytes(nbytes, "big"))
    return b"".join(chunks)


def canon(g: Graph) -> CanonResult:
    """Run the full canonical search on ``g``."""
    n = g.n
    if n > MAX_CANON_VERTICES:
        raise ValueError(f"canonical labeling supports n <= {MAX_CANON_VERTICES}, got {n}")
    adj = g.adj
    nbytes = (n + 7) // 8

    full = (1 << n) - 1
    best_code: bytes | None = None
    best_perm: tuple[int, ...] | None = None
    gens: list[tuple[int, ...]] = []
    uf = _UnionFind(n)

    def search(cells: list[int], path: list[int]) -> None:
        nonlocal best_code, best_perm
        # Leaf: partition discrete.
        if len(cells) == n:
            perm = tuple(cell.bit_length() - 1 for cell in cells)
            code = _leaf_code(n, adj, perm, nbytes)
            if best_code is None or code > best_code:
                best_code = code
                best_perm = perm
            elif code == best_code:
                assert best_perm is not None
                gamma = [0] * n
                for bp, p in zip(best_perm, perm):
                    gamma[bp] = p
                if any(gamma[v] != v for v in range(n)):
                    gens.append(tuple(gamma))
                    for v in range(n):
                        uf.union(v, gamma[v])
            return

        # Target cell: smallest non-singleton, earliest position on ties.
        target_idx = -1
        target_size = n + 1
        for i, cell in enumerate(cells):
            c = cell.bit_count()
            if 1 < c < target_size:
                target_idx = i
                target_size = c
        target = cells[target_idx]

        tried: list[int] = []
        for v in sorted(bits(target)):
            if tried:
                # Orbits under discovered automorphisms fixing the current
                # path pointwise; a sibling equivalent to a tried one leads
                # to a mirrored subtree and can be skipped.
                puf = _UnionFind(n)
                for gamma in gens:
                    if all(gamma[x] == x for x in path):
                        for x in range(n):
                            puf.union(x, gamma[x])
                if any(puf.find(v) == puf.find(u) for u in tried):
                    continue
            tried.append(v)
            vbit = 1 << v
            child = []
            for i, cell in enumerate(cells):
                if i == target_idx:
                    child.append(vbit)
                    child.append(cell ^ vbit)
                else:
                    child.append(cell)
            refined = _refine(adj, child, [vbit, target ^ vbit])
            path.append(v)
            search(refined, path)
            path.pop()

    initial = _refine(adj, [full], [full])
    search(initial, [])
    assert best_code is not None and best_perm is not None

    orbit = tuple(uf.find(v) for v in range(n))
    form = n.to_bytes(2, "big") + best_code
    return CanonResult(form, best_perm, orbit, tuple(gens))


# Small cache: enumeration streams call canon() directly and manage their
# own reuse; this cache serves the public wrappers (tests, witness sort).
_FORM_CACHE: dict[tuple[int, tuple[int, ...]], bytes] = {}
_FORM_CACHE_LIMIT = 1 << 17


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: equal iff isomorphic."""
    key = (g.n, g.adj)
    cached = _FORM_CACHE.get(key)
    if cached is not None:
        return cached
    form = canon(g).form
    if len(_FORM_CACHE) < _FORM_CACHE_LIMIT:
        _FORM_CACHE[key] = form
    return form


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of ``g``."""
    return g.relabel(canon(g).labeling)


def automorphism_orbits(g: Graph) -> tuple[int, ...]:
    """Orbit representative (smallest member) per vertex under Aut(g)."""
    return canon(g).orbits
