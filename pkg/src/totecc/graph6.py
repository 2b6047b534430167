"""graph6 encoding and decoding (bit-exact per the published format).

Only the graph6 flavor is handled: simple undirected graphs, upper
triangle read column by column ((0,1), (0,2), (1,2), (0,3), ...), packed
big-endian into 6-bit groups offset by 63.  Orders up to 62 use the
one-byte size; 63..200 use the '~' + 3-byte size.  The optional
'>>graph6<<' header is accepted on input.
"""

from __future__ import annotations

from .graph import Graph

_HEADER = ">>graph6<<"


def encode(g: Graph) -> str:
    """Encode a graph as a graph6 ASCII string."""
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    else:
        prefix = "~" + "".join(chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0))
    bits_out: list[int] = []
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            bits_out.append(col >> u & 1)
    while len(bits_out) % 6:
        bits_out.append(0)
    chars = []
    for i in range(0, len(bits_out), 6):
        group = 0
        for b in bits_out[i : i + 6]:
            group = group << 1 | b
        chars.append(chr(group + 63))
    return prefix + "".join(chars)


def decode(text: str) -> Graph:
    """Decode a graph6 string (optional '>>graph6<<' header allowed)."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :].strip()
    if not s:
        raise ValueError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(v < 0 or v > 63 for v in vals):
        raise ValueError("invalid graph6 character")
    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    else:
        if len(vals) < 4 or vals[1] == 63:
            raise ValueError("unsupported graph6 size encoding")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    if n < 1:
        raise ValueError(f"graph6 order {n} not supported (need n >= 1)")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} groups, expected {need}")
    stream = 0
    for v in body:
        stream = stream << 6 | v
    total_bits = 6 * len(body)
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            bit = stream >> (total_bits - 1 - idx) & 1
            idx += 1
            if bit:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))
