"""graph6 text codec for graphs with fewer than 63 vertices.

The header byte is ``n + 63``. The body packs the upper triangle of the
adjacency matrix column by column -- pairs ``(0,1), (0,2), (1,2), (0,3), ...``
-- six bits per byte (most significant first), zero padded, each byte
offset by 63.
"""

from typing import Iterator, TextIO

from .exceptions import GraphError
from .graph import Graph

__all__ = ["graph6_decode", "graph6_encode", "read_graph6", "pair_order"]

MAX_ORDER = 62


def pair_order(n: int) -> list:
    """Vertex pairs in graph6 bit order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise GraphError(f"graph6 encoding supports n <= {MAX_ORDER}, got {n}")
    bits = [g.rows[j] >> i & 1 for i, j in pair_order(n)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start : start + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return chr(n + 63) + "".join(body)


def graph6_decode(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphError("empty graph6 string")
    for offset, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"invalid graph6 character {ch!r} at byte offset {offset}")
    n = ord(s[0]) - 63
    if n > MAX_ORDER:
        raise GraphError("extended graph6 headers (n >= 63) are not supported")
    pairs = pair_order(n)
    need = (len(pairs) + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise GraphError(f"truncated graph6 body: expected {need} bytes, got {len(body)} (at byte offset {len(s)})")
    if len(body) > need:
        raise GraphError(f"trailing data after graph6 body at byte offset {1 + need}")
    rows = [0] * n
    for idx, (i, j) in enumerate(pairs):
        byte = ord(body[idx // 6]) - 63
        if byte >> (5 - idx % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, rows)


def read_graph6(stream: TextIO) -> Iterator[Graph]:
    """Decode one graph per non-blank line."""
    for line in stream:
        line = line.strip()
        if line:
            yield graph6_decode(line)
