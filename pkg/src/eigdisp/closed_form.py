"""Analytic eigenvectors, statistics and limits for the named families.

These are independent of the power-iteration path in :mod:`eigdisp.spectral`
and serve as its oracle. Infinite or unstated limits are :class:`Limit`
members, which support no arithmetic.
"""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .dispersion import cv_squared
from .exceptions import GraphError
from .families import FamilyKind, FamilySpec, kite
from .graph import DegreeMultiset
from .spectral import principal_eigenpair, sigma_tau

__all__ = [
    "Limit",
    "FamilyStats",
    "LimitRecord",
    "complete_minus_edge_stats",
    "tripartite_stats",
    "split_eigvec",
    "split_stats",
    "split_limits",
    "kite_eigvec",
    "kite_stats",
    "pendant_clique_limits",
    "regular_kite_cd",
    "regular_kite_cd_limit",
    "star_stats",
    "power_stats",
    "family_stats",
    "limits_report",
    "gamma_star",
    "gamma_split_limit",
]


class Limit(enum.Enum):
    INFINITE = "inf"
    NOT_STATED = "not stated"


LimitValue = Union[float, Fraction, Limit]


@dataclass(frozen=True)
class FamilyStats:
    """Closed-form statistics of one family member.

    ``x`` is the analytic principal eigenvector in the family's vertex
    labeling, scaled so its largest entry is 1. Fields without a closed form
    are ``None``.
    """

    spec: FamilySpec
    gamma: Optional[float]
    c_e: Optional[float]
    c_d: Fraction
    lam: Optional[float] = None
    x: Optional[np.ndarray] = None

    @property
    def Gamma(self) -> Optional[float]:
        if self.gamma is None or self.c_e is None:
            return None
        # two divisions so that gamma near the float ceiling does not overflow
        value = (self.c_e - float(self.c_d)) / self.gamma / self.gamma
        return None if math.isnan(value) else value


@dataclass(frozen=True)
class LimitRecord:
    family: str
    lim_gamma_sq_minus_1: LimitValue
    lim_c_e: LimitValue
    lim_c_d: LimitValue
    k: Optional[float] = None
    lim_gamma: Optional[LimitValue] = None


def _two_value_cv(p: float, p_mult: int, q: float, q_mult: int) -> float:
    # c for ((p, P), (q, Q)): P Q (p - q)^2 / (P p + Q q)^2
    return p_mult * q_mult * (p - q) ** 2 / (p_mult * p + q_mult * q) ** 2


def _normalise(x: np.ndarray) -> np.ndarray:
    return x / x.max()


def complete_minus_edge_stats(n: int) -> FamilyStats:
    if n <= 2:
        raise GraphError("K_n minus an edge needs n > 2")
    a = ((n - 3) + math.sqrt(n * n + 2 * n - 7)) / (2 * (n - 2))
    # a sits on the n-2 vertices of degree n-1; the two endpoints of the missing edge carry 1
    x = np.array([1.0, 1.0] + [a] * (n - 2))
    degrees = DegreeMultiset([(n - 2, 2), (n - 1, n - 2)])
    return FamilyStats(
        spec=FamilySpec(FamilyKind.COMPLETE_MINUS_EDGE, (n,)),
        gamma=a,
        c_e=_two_value_cv(a, n - 2, 1.0, 2),
        c_d=degrees.cv_squared(),
        lam=(n - 2) * a,
        x=_normalise(x),
    )


def tripartite_stats(n: int) -> FamilyStats:
    if n < 1:
        raise GraphError("K_{1,n,n} needs n >= 1")
    b = (n + math.sqrt(n * n + 8 * n)) / (4 * n)
    x = np.array([1.0] + [b] * (2 * n))
    degrees = DegreeMultiset([(2 * n, 1), (n + 1, 2 * n)])
    return FamilyStats(
        spec=FamilySpec(FamilyKind.COMPLETE_TRIPARTITE_1NN, (n,)),
        gamma=max(1.0, b) / min(1.0, b),
        c_e=_two_value_cv(1.0, 1, b, 2 * n),
        c_d=degrees.cv_squared(),
        lam=2 * n * b,
        x=_normalise(x),
    )


def split_eigvec(n: int, m: int) -> tuple:
    """Clique and independent-set entries ``(1, b)`` of the S(n, m) eigenvector."""
    if n < 1 or m < 1:
        raise GraphError("S(n, m) needs n >= 1 and m >= 1")
    b = (1 - n + math.sqrt((n - 1) ** 2 + 4 * n * m)) / (2 * m)
    return 1.0, b


def split_stats(n: int, m: int) -> FamilyStats:
    _, b = split_eigvec(n, m)
    nm = n * m * m + n * n * m
    ce = (b - 1) ** 2 * nm / ((n + m) * (n + m * b) ** 2)
    cd = Fraction((m - 1) ** 2 * nm, (n + m) * (n * n + 2 * n * m - n) ** 2)
    return FamilyStats(
        spec=FamilySpec(FamilyKind.COMPLETE_SPLIT, (n, m)),
        gamma=1.0 / b,
        c_e=ce,
        c_d=cd,
        lam=n - 1 + m * b,
        x=np.array([1.0] * n + [b] * m),
    )


def split_limits(k) -> LimitRecord:
    """Limits of S(n, kn) as n grows with the ratio k fixed."""
    if k <= 0:
        raise GraphError("ratio k must be positive")
    root = math.sqrt(4 * k + 1)
    gamma = (root + 1) / 2
    ce = k * ((root - 1) / k - 2) ** 2 / (root + 1) ** 2
    kq = Fraction(k)
    cd = kq**3 / (2 * kq + 1) ** 2
    return LimitRecord(
        family="S(n,kn)",
        k=k,
        lim_gamma=gamma,
        lim_gamma_sq_minus_1=gamma**2 - 1,
        lim_c_e=ce,
        lim_c_d=cd,
    )


def kite_eigvec(m: int, s: int, lam: float) -> np.ndarray:
    """Eigenvector of P_m K_s from its spectral radius, pendant entry 1.

    Path entries follow ``x_k = (sigma^k - tau^k)/(sigma - tau)``; the
    ``s - 1`` clique vertices off the path share the value
    ``(sigma^(m+1) - tau^(m+1)) / ((sigma - tau)(s - 1))``.
    """
    if lam <= 2:
        raise GraphError(f"kite eigenvector needs lambda > 2, got {lam}")
    st = sigma_tau(lam)
    sig, tau = st.sigma, st.tau

    def chebyshev(k):
        return (sig**k - tau**k) / (sig - tau)

    path = [chebyshev(k) for k in range(1, m + 1)]
    head = chebyshev(m + 1) / (s - 1)
    return np.array(path + [head] * (s - 1))


def kite_stats(m: int, s: int) -> FamilyStats:
    """Kite statistics from the analytic eigenvector at the numeric spectral radius."""
    g = kite(m, s)
    lam = principal_eigenpair(g).lam
    x = kite_eigvec(m, s, lam)
    return FamilyStats(
        spec=FamilySpec(FamilyKind.KITE, (m, s)),
        gamma=float(x.max() / x.min()),
        c_e=cv_squared(x),
        c_d=DegreeMultiset.from_values(g.degrees).cv_squared(),
        lam=lam,
        x=_normalise(x),
    )


def pendant_clique_limits() -> LimitRecord:
    return LimitRecord(
        family="P_2K_{n-1}",
        lim_gamma=Limit.INFINITE,
        lim_gamma_sq_minus_1=Limit.INFINITE,
        lim_c_e=0.0,
        lim_c_d=0.0,
    )


def regular_kite_cd(m: int, n: int, r: int) -> Fraction:
    """Exact c_d of P_m G_n^r from its degree multiset (any r-regular head)."""
    if m < 2:
        raise GraphError("degree multiset formula needs m >= 2")
    entries = [(1, 1), (r, n - 1), (r + 1, 1)]
    if m > 2:
        entries.append((2, m - 2))
    return DegreeMultiset(entries).cv_squared()


def regular_kite_cd_limit(r: int) -> Fraction:
    if r < 2:
        raise GraphError("regularity r must be >= 2")
    return Fraction(r - 2, r + 2) ** 2


def star_stats(n: int) -> FamilyStats:
    if n < 1:
        raise GraphError("star needs n >= 1")
    root = math.sqrt(n)
    x = np.array([1.0] + [1.0 / root] * n)
    return FamilyStats(
        spec=FamilySpec(FamilyKind.STAR, (n,)),
        gamma=root,
        c_e=2 * (n + 1) / (root + 1) ** 2 - 1,
        c_d=Fraction(n**3 + 2 * n**2 + n, 4 * n**2) - 1,
        lam=root,
        x=x,
    )


def gamma_star(n: int) -> float:
    """Gamma indicator of K_{1,n} from the closed forms."""
    return star_stats(n).Gamma


def gamma_split_limit(k) -> float:
    """Limit over n of the Gamma indicator of S(n, kn)."""
    rec = split_limits(k)
    return (rec.lim_c_e - float(rec.lim_c_d)) / rec.lim_gamma**2


def power_stats(base: FamilyStats, k: int) -> FamilyStats:
    """Statistics of the k-th Cartesian power from those of the base graph."""
    if k < 1:
        raise GraphError("k must be >= 1")
    if base.gamma is None or base.c_e is None:
        gamma = ce = None
    else:
        gamma = _safe_pow(base.gamma, k)
        ce = _safe_pow(1.0 + base.c_e, k) - 1.0
    x = None
    if base.x is not None and base.x.size**k <= 1 << 20:
        x = base.x
        for _ in range(k - 1):
            x = np.outer(x, base.x).ravel()
    return FamilyStats(
        spec=FamilySpec(FamilyKind.CARTESIAN_POWER, (base.spec, k)),
        gamma=gamma,
        c_e=ce,
        c_d=base.c_d / k,
        lam=None if base.lam is None else k * base.lam,
        x=x,
    )


def _safe_pow(value: float, k: int) -> float:
    try:
        return value**k
    except OverflowError:
        return math.inf


def family_stats(spec: FamilySpec) -> FamilyStats:
    """Dispatch to the closed form for ``spec``.

    Regular kites have only a closed-form ``c_d``; their ``gamma`` and
    ``c_e`` come back as ``None``.
    """
    kind = spec.kind
    p = spec.params
    if kind is FamilyKind.COMPLETE_MINUS_EDGE:
        return complete_minus_edge_stats(*p)
    if kind is FamilyKind.COMPLETE_TRIPARTITE_1NN:
        return tripartite_stats(*p)
    if kind is FamilyKind.COMPLETE_SPLIT:
        return split_stats(*p)
    if kind is FamilyKind.KITE:
        return kite_stats(*p)
    if kind is FamilyKind.STAR:
        return star_stats(*p)
    if kind is FamilyKind.REGULAR_KITE:
        m, n, r = p
        return FamilyStats(spec=spec, gamma=None, c_e=None, c_d=regular_kite_cd(m, n, r))
    base, k = p
    return power_stats(family_stats(base), int(k))


def limits_report(k=1, r: int = 4) -> list:
    """The seven limit rows, with the split row at ratio ``k`` and regular head degree ``r``."""
    return [
        LimitRecord("K_n-K_2", 0.0, 0.0, 0.0, lim_gamma=1.0),
        LimitRecord("K_{1,n,n}", 3.0, 0.0, 0.0, lim_gamma=2.0),
        split_limits(k),
        pendant_clique_limits(),
        LimitRecord(
            f"P_nG_n^{r}",
            Limit.INFINITE,
            Limit.NOT_STATED,
            regular_kite_cd_limit(r),
            lim_gamma=Limit.INFINITE,
        ),
        LimitRecord("K_{1,n}", Limit.INFINITE, 1.0, Limit.INFINITE, lim_gamma=Limit.INFINITE),
        LimitRecord("G^{[]n}", Limit.INFINITE, Limit.INFINITE, Fraction(0), lim_gamma=Limit.INFINITE),
    ]
