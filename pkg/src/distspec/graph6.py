"""graph6 encoding (nauty format): 6-bit groups offset by 63, upper triangle
read column by column."""

from __future__ import annotations

from .graphs import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for p in range(0, len(bits), 6):
        v = 0
        for bit in bits[p:p + 6]:
            v = v << 1 | bit
        body.append(chr(v + 63))
    return _encode_n(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= v <= 63 for v in vals):
        raise Graph6Error("graph6 characters must lie in the range 63..126")
    if vals[0] == 63:
        if len(vals) < 4:
            raise Graph6Error("truncated graph6 size header")
        if vals[1] == 63:
            raise Graph6Error("graph6 with more than 258047 vertices is not supported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        payload = vals[4:]
    else:
        n = vals[0]
        payload = vals[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph has {n} vertices, more than {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(payload) != need:
        raise Graph6Error(f"expected {need} payload bytes for n={n}, got {len(payload)}")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if payload[pos // 6] >> (5 - pos % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj))
