"""graph6 reader and writer (bit-exact with the nauty format)."""

from __future__ import annotations

from .errors import Graph6Error
from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


def _upper_triangle(n: int):
    # Column order: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as a header-free graph6 string."""
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~"] + [chr(63 + (n >> shift & 63)) for shift in (12, 6, 0)]
    value = 0
    width = 0
    for i, j in _upper_triangle(n):
        value = value << 1 | (g.adj[i] >> j & 1)
        width += 1
        if width == 6:
            out.append(chr(63 + value))
            value = width = 0
    if width:
        out.append(chr(63 + (value << (6 - width))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; the optional ``>>graph6<<`` header is skipped."""
    start = 0
    if text.startswith(HEADER):
        start = len(HEADER)
    end = len(text)
    while end > start and text[end - 1] in "\r\n":
        end -= 1
    for pos in range(start, end):
        if not 63 <= ord(text[pos]) <= 126:
            raise Graph6Error(f"byte {text[pos]!r} is outside the printable graph6 range", pos)
    if end == start:
        raise Graph6Error("missing length prefix", start)

    pos = start
    if text[pos] != "~":
        n = ord(text[pos]) - 63
        pos += 1
    else:
        if end - pos >= 2 and text[pos + 1] == "~":
            raise Graph6Error(f"8-byte length prefix implies more than {MAX_VERTICES} vertices", pos)
        if end - pos < 4:
            raise Graph6Error("truncated length prefix", pos)
        n = 0
        for k in range(1, 4):
            n = n << 6 | (ord(text[pos + k]) - 63)
        pos += 4
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds the {MAX_VERTICES}-vertex limit", start)

    n_bits = n * (n - 1) // 2
    n_bytes = (n_bits + 5) // 6
    if end - pos != n_bytes:
        raise Graph6Error(
            f"expected {n_bytes} data bytes for n={n}, found {end - pos}", min(pos + n_bytes, end)
        )
    adj = [0] * n
    pairs = _upper_triangle(n)
    for k in range(n_bytes):
        chunk = ord(text[pos + k]) - 63
        for b in range(6):
            bit = chunk >> (5 - b) & 1
            idx = 6 * k + b
            if idx >= n_bits:
                if bit:
                    raise Graph6Error("nonzero padding bits", pos + k)
                continue
            i, j = next(pairs)
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph._trusted(n, adj)
