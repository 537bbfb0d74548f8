"""Watts-Strogatz clustering and transitivity, exact in rational arithmetic.

Vertices of degree 0 or 1 have no defined local coefficient. They are
reported as ``None`` in :attr:`ClusteringReport.local`. They contribute 0
to the average but still count in its divisor ``n``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exceptions import GraphError
from .graph import Graph, triangles_at

__all__ = [
    "ClusteringReport",
    "local_clustering",
    "average_clustering",
    "transitivity",
    "clustering_report",
    "split_clustering_closed_form",
    "split_divergence_limits",
    "split_triangle_count",
]


def local_clustering(g: Graph, v: int) -> Optional[Fraction]:
    """``2 t_v / (d_v (d_v - 1))``, or ``None`` when ``deg(v) <= 1``."""
    d = g.degrees[v]
    if d <= 1:
        return None
    return Fraction(2 * triangles_at(g, v), d * (d - 1))


def average_clustering(g: Graph) -> Fraction:
    total = Fraction(0)
    for v in range(g.n):
        c = local_clustering(g, v)
        if c is not None:
            total += c
    return total / g.n


def transitivity(g: Graph) -> Optional[Fraction]:
    """``3 * triangles / sum_i C(d_i, 2)``; ``None`` if no vertex has degree >= 2."""
    wedges = sum(d * (d - 1) // 2 for d in g.degrees)
    if wedges == 0:
        return None
    closed = sum(triangles_at(g, v) for v in range(g.n))
    # closed counts every triangle three times
    return Fraction(closed, wedges)


@dataclass(frozen=True)
class ClusteringReport:
    local: tuple
    average: Fraction
    transitivity: Optional[Fraction]
    triangle_count: int
    undefined_count: int

    def as_dict(self) -> dict:
        return {
            "average_clustering": self.average,
            "transitivity": self.transitivity,
            "triangle_count": self.triangle_count,
            "undefined_local_count": self.undefined_count,
        }


def clustering_report(g: Graph) -> ClusteringReport:
    tri = [triangles_at(g, v) for v in range(g.n)]
    local = []
    for v, t in enumerate(tri):
        d = g.degrees[v]
        local.append(Fraction(2 * t, d * (d - 1)) if d > 1 else None)
    wedges = sum(d * (d - 1) // 2 for d in g.degrees)
    return ClusteringReport(
        local=tuple(local),
        average=sum((c for c in local if c is not None), Fraction(0)) / g.n,
        transitivity=Fraction(sum(tri), wedges) if wedges else None,
        triangle_count=sum(tri) // 3,
        undefined_count=sum(c is None for c in local),
    )


def split_clustering_closed_form(n: int, m: int) -> tuple:
    """Average clustering and transitivity of S(n, m) from the closed forms.

    ``n == 1`` is the star: no triangles, so both are 0 (transitivity is
    ``None`` for the single edge S(1, 1)).
    """
    if n < 1 or m < 1:
        raise GraphError("S(n, m) needs n >= 1 and m >= 1")
    if n == 1:
        return Fraction(0), (Fraction(0) if m >= 2 else None)
    c_clique = Fraction((n - 1) * (n - 2) + 2 * (n - 1) * m, (n + m - 1) * (n + m - 2))
    avg = (m + c_clique * n) / (n + m)
    trans = Fraction(
        (n - 1) * (n - 2) * n + 3 * (n - 1) * n * m,
        (n + m - 1) * (n + m - 2) * n + (n - 1) * n * m,
    )
    return avg, trans


def split_triangle_count(n: int, m: int) -> int:
    return n * (n - 1) * (n - 2) // 6 + n * (n - 1) // 2 * m


def split_divergence_limits(k) -> tuple:
    """Limits over n of average clustering and transitivity of S(n, kn).

    Both tend to ``(1, 0)`` as k grows.
    """
    if k < 1:
        raise GraphError("ratio k must be >= 1")
    k = Fraction(k)
    avg = (k**3 + 2 * k**2 + 3 * k + 1) / (k**3 + 3 * k**2 + 3 * k + 1)
    trans = (3 * k + 1) / (k**2 + 3 * k + 1)
    return avg, trans
