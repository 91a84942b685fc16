"""Reading and writing undirected graphs in graph6 format.

The format packs the upper triangle of the adjacency matrix, read
column by column, into 6-bit chunks offset by 63.
"""

from __future__ import annotations

from .graphs import Graph, build_graph

__all__ = ["Graph6Error", "parse_graph6", "write_graph6"]

_HEADER = ">>graph6<<"
_MAX_ORDER = 100_000


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _parse_order(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:  # '~'
        n = data[0] - 63
        if not 0 <= n <= 62:
            raise Graph6Error(f"order byte {data[0]} out of range")
        return n, data[1:]
    if len(data) >= 2 and data[1] != 126:
        chunk, rest = data[1:4], data[4:]
        if len(chunk) != 3:
            raise Graph6Error("truncated 3-byte order field")
    else:
        chunk, rest = data[2:8], data[8:]
        if len(chunk) != 6:
            raise Graph6Error("truncated 6-byte order field")
    n = 0
    for b in chunk:
        if not 63 <= b <= 126:
            raise Graph6Error(f"order byte {b} out of range")
        n = (n << 6) | (b - 63)
    if n > _MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the supported maximum")
    return n, rest


def parse_graph6(text: str) -> Graph:
    """Graph from one graph6 line (optional >>graph6<< header allowed)."""
    line = text.strip()
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("graph6 text must be ASCII") from exc
    n, body = _parse_order(data)
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"expected {(nbits + 5) // 6} data bytes for order {n}, got {len(body)}"
        )
    bits = []
    for b in body:
        if not 63 <= b <= 126:
            raise Graph6Error(f"data byte {b} out of range")
        bits.extend((b - 63) >> shift & 1 for shift in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return build_graph(n, edges)


def write_graph6(g: Graph) -> str:
    n = g.order
    if n > _MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the supported maximum")
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    else:
        head = bytes([126, 126]) + bytes(
            (n >> shift & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)
        )
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3
              | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5])
        for i in range(0, len(bits), 6)
    )
    return (head + body).decode("ascii")
