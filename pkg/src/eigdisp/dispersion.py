"""Dispersion statistics of the principal eigenvector and the degree vector.

``c_e`` and ``c_d`` are squared coefficients of variation,
``n * ||x||_2^2 / ||x||_1^2 - 1``. Degree statistics are exact
(:class:`fractions.Fraction`); eigenvector statistics are floats.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exceptions import GraphError
from .graph import DegreeMultiset, Graph
from .spectral import DEFAULT_TOL, EigenPair, principal_eigenpair, principal_ratio

__all__ = [
    "DispersionReport",
    "cv_squared",
    "c_e",
    "c_d",
    "gamma_indicator",
    "ce_lambda_bound",
    "cd_avgdeg_bound",
    "ksum_l1",
    "ksum_l2sq",
    "ce_product",
    "cd_power",
    "dispersion_report",
]


def cv_squared(x: Sequence[float]) -> float:
    """Squared coefficient of variation of a strictly positive vector."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise GraphError("cv_squared needs a non-empty 1-d sequence")
    if not np.all(arr > 0):
        raise GraphError("cv_squared needs strictly positive entries")
    # centred form of n*||x||_2^2/||x||_1^2 - 1; avoids cancellation near 0
    arr = arr / arr.max()
    mean = float(arr.mean())
    dev = arr - mean
    return float(dev @ dev) / arr.size / mean**2


def _eigenpair(g, pair):
    return pair if pair is not None else principal_eigenpair(g)


def c_e(g: Graph, pair: EigenPair = None) -> float:
    return cv_squared(_eigenpair(g, pair).x)


def c_d(g: Graph) -> Fraction:
    if g.min_degree() < 1:
        raise GraphError("c_d is undefined for graphs with isolated vertices")
    return DegreeMultiset.from_values(g.degrees).cv_squared()


def gamma_indicator(g: Graph, pair: EigenPair = None) -> float:
    """``(c_e - c_d) / gamma^2``."""
    pair = _eigenpair(g, pair)
    gamma = principal_ratio(pair)
    return (cv_squared(pair.x) - float(c_d(g))) / gamma**2


def ce_lambda_bound(g: Graph, pair: EigenPair = None) -> float:
    """``n / (lambda + 1) - 1``, an upper bound on ``c_e``."""
    return g.n / (_eigenpair(g, pair).lam + 1.0) - 1.0


def cd_avgdeg_bound(g: Graph) -> Fraction:
    """``max degree / mean degree - 1``, an upper bound on ``c_d``."""
    if g.min_degree() < 1:
        raise GraphError("degree bound needs minimum degree >= 1")
    return Fraction(g.max_degree() * g.n, sum(g.degrees)) - 1


def ksum_l1(a: DegreeMultiset, k: int) -> int:
    """1-norm of the k-fold multiset sum ``A + ... + A``."""
    if k < 1:
        raise GraphError("k must be >= 1")
    return k * len(a) ** (k - 1) * a.l1()


def ksum_l2sq(a: DegreeMultiset, k: int) -> int:
    """Squared 2-norm of the k-fold multiset sum."""
    if k < 1:
        raise GraphError("k must be >= 1")
    if k == 1:
        return a.l2sq()
    size = len(a)
    return k * size ** (k - 2) * (size * a.l2sq() + (k - 1) * a.l1() ** 2)


def ce_product(ce_a: float, ce_b: float) -> float:
    """``c_e`` of a Cartesian product from the factors' ``c_e``."""
    if ce_a < 0 or ce_b < 0:
        raise GraphError("c_e values are non-negative")
    return ce_a * ce_b + ce_a + ce_b


def cd_power(cd_g: Fraction, k: int) -> Fraction:
    """``c_d`` of the k-th Cartesian power."""
    if k < 1:
        raise GraphError("k must be >= 1")
    return Fraction(cd_g) / k


@dataclass(frozen=True)
class DispersionReport:
    n: int
    lam: float
    gamma: float
    gamma_sq_minus_1: float
    c_e: float
    c_d: Fraction
    Gamma: float
    # (gamma^2-1) - c_e, (gamma^2-1) - c_d, (n/(lam+1)-1) - c_e, (max/mean degree - 1) - c_d
    bound_slacks: tuple

    def as_dict(self) -> dict:
        names = ("ce_gamma", "cd_gamma", "ce_lambda", "cd_avgdeg")
        out = {
            "n": self.n,
            "lambda": self.lam,
            "gamma": self.gamma,
            "gamma_sq_minus_1": self.gamma_sq_minus_1,
            "c_e": self.c_e,
            "c_d": self.c_d,
            "Gamma": self.Gamma,
        }
        for name, value in zip(names, self.bound_slacks):
            out[f"slack_{name}"] = value
        return out


def dispersion_report(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = None) -> DispersionReport:
    pair = principal_eigenpair(g, tol=tol, max_iter=max_iter)
    gamma = principal_ratio(pair)
    g2m1 = gamma * gamma - 1.0
    ce = cv_squared(pair.x)
    cd = c_d(g)
    slacks = (
        g2m1 - ce,
        g2m1 - float(cd),
        ce_lambda_bound(g, pair) - ce,
        cd_avgdeg_bound(g) - cd,
    )
    return DispersionReport(
        n=g.n,
        lam=pair.lam,
        gamma=gamma,
        gamma_sq_minus_1=g2m1,
        c_e=ce,
        c_d=cd,
        Gamma=(ce - float(cd)) / (gamma * gamma),
        bound_slacks=slacks,
    )
