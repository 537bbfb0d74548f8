"""Immutable simple undirected graphs.

Adjacency is held as one Python ``int`` bitmask per vertex, so that
neighbourhood intersections (triangle counts, products) are single
``&``/``bit_count`` operations even for graphs with millions of edges.
"""

from collections import Counter, deque
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .exceptions import GraphError

__all__ = [
    "Graph",
    "DegreeMultiset",
    "build",
    "is_connected",
    "triangles_at",
    "triangle_count",
    "cartesian_product",
    "cartesian_power",
    "distances_from",
]


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable. Use :func:`build` to construct one
    from an edge list.
    """

    __slots__ = ("_n", "_rows", "_degrees")

    def __init__(self, n: int, rows: Sequence[int]):
        # trusted constructor: rows must already be symmetric and loop-free
        self._n = n
        self._rows = tuple(rows)
        self._degrees = tuple(r.bit_count() for r in self._rows)

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple:
        """Per-vertex neighbour bitmasks (bit ``u`` of ``rows[v]`` set iff uv is an edge)."""
        return self._rows

    @property
    def degrees(self) -> tuple:
        return self._degrees

    @property
    def edge_count(self) -> int:
        return sum(self._degrees) // 2

    @property
    def edges(self) -> list:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        out = []
        for v, row in enumerate(self._rows):
            above = row >> (v + 1)
            while above:
                low = above & -above
                out.append((v, v + low.bit_length()))
                above ^= low
        return out

    def neighbors(self, v: int) -> list:
        return _bits_to_list(self._rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def max_degree(self) -> int:
        return max(self._degrees)

    def min_degree(self) -> int:
        return min(self._degrees)

    def is_regular(self) -> bool:
        return len(set(self._degrees)) == 1

    def degree_multiset(self) -> "DegreeMultiset":
        return DegreeMultiset.from_values(self._degrees)

    def adjacency_matrix(self, dtype=np.float64) -> np.ndarray:
        n = self._n
        nbytes = (n + 7) // 8
        raw = b"".join(r.to_bytes(nbytes, "little") for r in self._rows)
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return bits.reshape(n, nbytes * 8)[:, :n].astype(dtype)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        rows = [0] * self._n
        for v, row in enumerate(self._rows):
            rows[perm[v]] = sum(1 << perm[u] for u in _bits_to_list(row))
        return Graph(self._n, rows)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self):
        return hash((self._n, self._rows))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.edge_count})"


def _bits_to_list(row: int) -> list:
    out = []
    while row:
        low = row & -row
        out.append(low.bit_length() - 1)
        row ^= low
    return out


def build(n: int, edge_list: Iterable) -> Graph:
    """Build a graph on ``n`` vertices from ``(u, v)`` pairs; duplicates are merged."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    n = int(n)
    rows = [0] * n
    for pair in edge_list:
        u, v = (int(t) for t in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def is_connected(g: Graph) -> bool:
    rows = g.rows
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits_to_list(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def distances_from(g: Graph, source: int) -> list:
    """BFS distances from ``source``; unreachable vertices get ``None``."""
    dist = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in _bits_to_list(g.rows[v]):
            if dist[u] is None:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def triangles_at(g: Graph, v: int) -> int:
    """Number of edges among the neighbours of ``v``."""
    rows = g.rows
    row = rows[v]
    return sum((rows[u] & row).bit_count() for u in _bits_to_list(row)) // 2


def triangle_count(g: Graph) -> int:
    return sum(triangles_at(g, v) for v in range(g.n)) // 3


def cartesian_product(a: Graph, b: Graph) -> Graph:
    """Cartesian product; vertex ``(i, j)`` gets index ``i * b.n + j``."""
    nb = b.n
    rows = []
    for i in range(a.n):
        a_nbrs = _bits_to_list(a.rows[i])
        for j in range(nb):
            row = b.rows[j] << (i * nb)
            for i2 in a_nbrs:
                row |= 1 << (i2 * nb + j)
            rows.append(row)
    return Graph(a.n * nb, rows)


def cartesian_power(g: Graph, k: int) -> Graph:
    if k < 1:
        raise GraphError("cartesian power needs k >= 1")
    out = g
    for _ in range(k - 1):
        out = cartesian_product(out, g)
    return out


class DegreeMultiset:
    """A multiset of positive integers stored as ``(value, multiplicity)`` pairs."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        pairs = []
        for value, mult in entries:
            if mult < 1:
                raise GraphError(f"multiplicity must be >= 1, got {mult}")
            if value < 1:
                raise GraphError(f"multiset values must be positive, got {value}")
            pairs.append((int(value), int(mult)))
        self.entries = tuple(pairs)

    @classmethod
    def from_values(cls, values: Iterable) -> "DegreeMultiset":
        counts = Counter(int(v) for v in values)
        return cls(sorted(counts.items()))

    def normalized(self) -> "DegreeMultiset":
        counts = Counter()
        for value, mult in self.entries:
            counts[value] += mult
        return DegreeMultiset(sorted(counts.items()))

    def values(self) -> list:
        return [v for v, m in self.entries for _ in range(m)]

    def __len__(self):
        return sum(m for _, m in self.entries)

    def l1(self) -> int:
        return sum(v * m for v, m in self.entries)

    def l2sq(self) -> int:
        return sum(v * v * m for v, m in self.entries)

    def cv_squared(self) -> Fraction:
        """Exact squared coefficient of variation ``|A| ||A||_2^2 / ||A||_1^2 - 1``."""
        return Fraction(len(self) * self.l2sq(), self.l1() ** 2) - 1

    def __eq__(self, other):
        if not isinstance(other, DegreeMultiset):
            return NotImplemented
        return self.normalized().entries == other.normalized().entries

    def __hash__(self):
        return hash(self.normalized().entries)

    def __repr__(self):
        return f"DegreeMultiset({list(self.entries)})"
