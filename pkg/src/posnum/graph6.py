"""graph6 encoding and decoding for simple undirected graphs.

Layout per the standard format: an order prefix N(n), then the upper
triangle of the adjacency matrix in column order ((0,1), (0,2), (1,2),
(0,3), ...), packed big-endian into 6-bit groups, each offset by 63.
"""

from __future__ import annotations

from .graphs import Graph


class Graph6Error(ValueError):
    """Malformed graph6 input."""


_HEADER = ">>graph6<<"


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return (order, bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 line")
    c = data[0]
    if c != 126:
        return c - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise Graph6Error("truncated order prefix")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise Graph6Error("truncated order prefix")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        parts = [126, 126]
        parts += [((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1)]
        return bytes(parts)
    raise Graph6Error(f"order {n} too large for graph6")


def parse_graph6(line: str) -> Graph:
    """Parse one graph6 line; round-trips bit-exactly through serialize_graph6."""
    s = line.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 line")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error(f"non-ascii character in graph6 line: {s!r}") from exc
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"character {chr(b)!r} outside graph6 range 63..126")
    n, used = _decode_order(data)
    if n == 0:
        raise Graph6Error("order-0 graphs are not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[used:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated graph6 body: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after graph6 body")
    acc = 0
    for b in body:
        acc = (acc << 6) | (b - 63)
    pad = nbytes * 6 - nbits
    if acc & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    acc >>= pad
    rows = [0] * n
    pos = nbits - 1
    for v in range(1, n):
        for u in range(v):
            if (acc >> pos) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            pos -= 1
    return Graph(n, rows)


def serialize_graph6(g: Graph) -> str:
    n = g.n
    out = bytearray(_encode_order(n))
    acc = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            acc = (acc << 1) | ((g.rows[u] >> v) & 1)
            nbits += 1
    pad = (-nbits) % 6
    acc <<= pad
    nbits += pad
    for shift in range(nbits - 6, -1, -6):
        out.append(((acc >> shift) & 63) + 63)
    return out.decode("ascii")
