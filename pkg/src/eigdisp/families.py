"""Parameterised graph families with fixed, documented vertex labelings.

==========================  ================================================
family                      labeling
==========================  ================================================
``complete_minus_edge(n)``  K_n without edge 0-1
``complete_tripartite_1nn`` apex 0, clouds ``1..n`` and ``n+1..2n``
``complete_split(n, m)``    clique ``0..n-1``, independent ``n..n+m-1``
``kite(m, s)``              path ``0..m-1`` (0 pendant), clique ``m-1..m+s-2``
``regular_kite(m, n, r)``   path ``0..m-1``, circulant head vertex h -> ``m-1+h``
``star(n)``                 centre 0, rays ``1..n``
==========================  ================================================
"""

import enum
from dataclasses import dataclass

from .exceptions import GraphError
from .graph import Graph, cartesian_power

__all__ = [
    "FamilyKind",
    "FamilySpec",
    "complete_minus_edge",
    "complete_tripartite_1nn",
    "complete_split",
    "kite",
    "regular_kite",
    "star",
    "circulant",
    "realize",
]


def _full(count: int, offset: int = 0) -> int:
    return ((1 << count) - 1) << offset


def _clique_rows(n: int) -> list:
    everything = _full(n)
    return [everything & ~(1 << v) for v in range(n)]


def complete_minus_edge(n: int) -> Graph:
    if n <= 2:
        raise GraphError("K_n minus an edge needs n > 2")
    rows = _clique_rows(n)
    rows[0] &= ~0b10
    rows[1] &= ~0b01
    return Graph(n, rows)


def complete_tripartite_1nn(n: int) -> Graph:
    """K_{1,n,n}: an apex joined to two mutually complete n-clouds."""
    if n < 1:
        raise GraphError("K_{1,n,n} needs n >= 1")
    apex = 1
    left = _full(n, 1)
    right = _full(n, n + 1)
    rows = [left | right]
    rows += [apex | right] * n
    rows += [apex | left] * n
    return Graph(2 * n + 1, rows)


def complete_split(n: int, m: int) -> Graph:
    """S(n, m) = K_{n+m} - K_m: an n-clique completely joined to m independent vertices."""
    if n < 1 or m < 1:
        raise GraphError("S(n, m) needs n >= 1 and m >= 1")
    everything = _full(n + m)
    clique = _full(n)
    rows = [everything & ~(1 << v) for v in range(n)]
    rows += [clique] * m
    return Graph(n + m, rows)


def _attach_path(m: int, head_rows: list) -> Graph:
    """Identify path vertex ``m-1`` with head vertex 0."""
    shift = m - 1
    rows = [0] * (m - 1)
    for v in range(m - 1):
        if v > 0:
            rows[v] |= 1 << (v - 1)
        rows[v] |= 1 << (v + 1)
    shifted = [r << shift for r in head_rows]
    if m >= 2:
        shifted[0] |= 1 << (m - 2)
    return Graph(m - 1 + len(head_rows), rows + shifted)


def kite(m: int, s: int) -> Graph:
    """P_m K_s; ``m == 1`` gives K_s."""
    if m < 1:
        raise GraphError("kite needs a path of at least one vertex")
    if s < 3:
        raise GraphError("kite needs a clique of size s >= 3")
    return _attach_path(m, _clique_rows(s))


def circulant(n: int, r: int) -> Graph:
    """Connected r-regular circulant on n vertices.

    Offsets are ``±1..±floor(r/2)``, plus ``n/2`` when r is odd.
    """
    if r < 2 or r >= n:
        raise GraphError(f"need 2 <= r < n, got r={r}, n={n}")
    if (r * n) % 2:
        raise GraphError(f"no {r}-regular graph on {n} vertices (r*n odd)")
    offsets = set()
    for k in range(1, r // 2 + 1):
        offsets.add(k)
        offsets.add(n - k)
    if r % 2:
        offsets.add(n // 2)
    rows = []
    for v in range(n):
        rows.append(sum(1 << ((v + k) % n) for k in offsets))
    return Graph(n, rows)


def regular_kite(m: int, n: int, r: int) -> Graph:
    """P_m G_n^r with a circulant head; the path attaches at head vertex 0."""
    if m < 1:
        raise GraphError("regular kite needs m >= 1")
    return _attach_path(m, list(circulant(n, r).rows))


def star(n: int) -> Graph:
    """K_{1,n} with centre 0."""
    if n < 1:
        raise GraphError("star needs at least one ray")
    return complete_split(1, n)


class FamilyKind(enum.Enum):
    COMPLETE_MINUS_EDGE = "complete-minus-edge"
    COMPLETE_TRIPARTITE_1NN = "tripartite"
    COMPLETE_SPLIT = "complete-split"
    KITE = "kite"
    REGULAR_KITE = "regular-kite"
    STAR = "star"
    CARTESIAN_POWER = "cartesian-power"


_ARITY = {
    FamilyKind.COMPLETE_MINUS_EDGE: 1,
    FamilyKind.COMPLETE_TRIPARTITE_1NN: 1,
    FamilyKind.COMPLETE_SPLIT: 2,
    FamilyKind.KITE: 2,
    FamilyKind.REGULAR_KITE: 3,
    FamilyKind.STAR: 1,
}

_BUILDERS = {
    FamilyKind.COMPLETE_MINUS_EDGE: complete_minus_edge,
    FamilyKind.COMPLETE_TRIPARTITE_1NN: complete_tripartite_1nn,
    FamilyKind.COMPLETE_SPLIT: complete_split,
    FamilyKind.KITE: kite,
    FamilyKind.REGULAR_KITE: regular_kite,
    FamilyKind.STAR: star,
}


@dataclass(frozen=True)
class FamilySpec:
    """A family member: ``kind`` plus its integer parameters.

    For ``CARTESIAN_POWER`` the parameters are ``(base_spec, k)``.
    """

    kind: FamilyKind
    params: tuple

    def __post_init__(self):
        kind = FamilyKind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", tuple(self.params))
        if kind is FamilyKind.CARTESIAN_POWER:
            if len(self.params) != 2 or not isinstance(self.params[0], FamilySpec):
                raise GraphError("cartesian power params are (base FamilySpec, k)")
            if int(self.params[1]) < 1:
                raise GraphError("cartesian power needs k >= 1")
        elif len(self.params) != _ARITY[kind]:
            raise GraphError(f"{kind.value} takes {_ARITY[kind]} parameter(s), got {len(self.params)}")

    @property
    def label(self) -> str:
        if self.kind is FamilyKind.CARTESIAN_POWER:
            base, k = self.params
            return f"({base.label})^{k}"
        args = ",".join(str(p) for p in self.params)
        return f"{self.kind.value}({args})"


def realize(spec: FamilySpec) -> Graph:
    if spec.kind is FamilyKind.CARTESIAN_POWER:
        base, k = spec.params
        return cartesian_power(realize(base), int(k))
    return _BUILDERS[spec.kind](*spec.params)
