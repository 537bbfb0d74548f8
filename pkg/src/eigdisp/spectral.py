"""Principal eigenpairs of adjacency matrices and the bounds built on them."""

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .exceptions import ConvergenceError, DisconnectedGraphError, GraphError
from .graph import Graph, distances_from, is_connected

__all__ = [
    "EigenPair",
    "SigmaTau",
    "principal_eigenpair",
    "principal_ratio",
    "sigma_tau",
    "pendant_path_gamma_bound",
    "kite_spectral_radius_bounds",
    "extreme_vertex_distance",
    "batch_principal_eigenpairs",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-12
_MIN_ITER = 10_000
# above this order the adjacency goes to CSR instead of a dense array
_DENSE_LIMIT = 1024
# iterations without a new best residual before moving to extended precision,
# and then before giving up: by then the residual sits on the rounding floor
_POLISH_WINDOW = 50
# a float64 plateau above this is not rounding noise, so keep iterating
_POLISH_BELOW = 1e-6
_STALL_WINDOW = 2000


@dataclass(frozen=True)
class EigenPair:
    """Principal eigenvalue ``lam`` with its positive unit eigenvector ``x``."""

    lam: float
    x: np.ndarray
    residual: float
    iterations: int

    @property
    def x_max(self) -> float:
        return float(self.x.max())

    @property
    def x_min(self) -> float:
        return float(self.x.min())


@dataclass(frozen=True)
class SigmaTau:
    sigma: float
    tau: float


def default_max_iter(n: int, tol: float) -> int:
    return max(_MIN_ITER, 10 * n * math.ceil(math.log(1.0 / tol)))


def _operator(g: Graph):
    dense = g.adjacency_matrix()
    if g.n <= _DENSE_LIMIT:
        return dense
    return sp.csr_matrix(dense)


def principal_eigenpair(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = None) -> EigenPair:
    """Power iteration on ``A + I`` from the normalised all-ones vector.

    The identity shift keeps bipartite graphs from oscillating and leaves the
    eigenvectors unchanged. Convergence is declared once the max-norm residual
    ``|A x - lam x|`` (on ``A`` itself, ``lam`` the Rayleigh quotient) drops to
    ``tol``.

    Iteration runs in float64 until the residual stops improving. On graphs
    with a large spectral radius that plateau can sit above ``1e-12`` purely
    from rounding in ``A @ x``, so the remaining sweeps and the residual
    measurement switch to extended precision (``np.longdouble``). The
    returned vector is rounded back to float64.

    Raises
    ------
    DisconnectedGraphError
        If ``g`` is not connected.
    ConvergenceError
        If ``max_iter`` iterations pass without meeting ``tol``, or the
        residual stops improving even in extended precision; carries the
        last residual.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("principal eigenpair requires a connected graph")
    n = g.n
    if n == 1:
        return EigenPair(0.0, np.ones(1), 0.0, 0)
    if max_iter is None:
        max_iter = default_max_iter(n, tol)
    A = _operator(g)
    x = np.full(n, 1.0 / math.sqrt(n))
    precise = False
    residual = best = math.inf
    best_at = 0
    for it in range(1, max_iter + 1):
        ax = A @ x
        lam = x @ ax
        residual = float(np.max(np.abs(ax - lam * x)))
        if residual <= tol:
            x = x.astype(np.float64)
            return EigenPair(float(lam), x / np.linalg.norm(x), residual, it - 1)
        if residual < best:
            best, best_at = residual, it
        elif not precise and best < _POLISH_BELOW and it - best_at > _POLISH_WINDOW:
            A = sp.csr_matrix(A, dtype=np.longdouble)
            x = x.astype(np.longdouble)
            precise, best, best_at = True, math.inf, it
        elif precise and it - best_at > _STALL_WINDOW:
            raise ConvergenceError(
                f"residual stagnated at {best:.3e} after {it} iterations; "
                f"tol={tol:.1e} is below the floating-point floor for this graph",
                residual,
                it,
            )
        y = ax + x
        x = y / np.sqrt(y @ y)
    raise ConvergenceError(
        f"power iteration did not converge in {max_iter} iterations (residual {residual:.3e})",
        residual,
        max_iter,
    )


def principal_ratio(e: EigenPair) -> float:
    return e.x_max / e.x_min


def sigma_tau(lam: float) -> SigmaTau:
    if lam < 2:
        raise GraphError(f"sigma is complex for lambda < 2 (lambda={lam})")
    sigma = (lam + math.sqrt(lam * lam - 4.0)) / 2.0
    return SigmaTau(sigma, 1.0 / sigma)


def pendant_path_gamma_bound(lam: float, d: int) -> float:
    """Upper bound ``(sigma^(d+1) - tau^(d+1)) / (sigma - tau)`` on the principal ratio.

    ``d`` is the distance between a vertex where ``x`` is maximal and one
    where it is minimal.
    """
    if lam <= 2:
        raise GraphError(f"pendant path bound needs lambda > 2, got {lam}")
    if d < 0:
        raise GraphError("distance must be non-negative")
    st = sigma_tau(lam)
    # sum_{i=0}^{d} sigma^(d-2i): same quotient without cancellation
    return math.fsum(st.sigma ** (d - 2 * i) for i in range(d + 1))


def kite_spectral_radius_bounds(m: int, s: int) -> tuple:
    """Open interval containing the spectral radius of P_m K_s."""
    if m < 2 or s < 3:
        raise GraphError("kite radius bounds need m >= 2 and s >= 3")
    return (s - 1 + 1.0 / (s * (s - 1)), s - 1 + 1.0 / (s - 1) ** 2)


def extreme_vertex_distance(g: Graph, x: np.ndarray, rtol: float = 1e-12) -> int:
    """Distance between the lowest-index maximal and lowest-index minimal entries of ``x``.

    Entries within ``rtol * max(x)`` of the extreme count as ties.
    """
    slack = rtol * float(np.max(x))
    vmax = int(np.flatnonzero(x >= x.max() - slack)[0])
    vmin = int(np.flatnonzero(x <= x.min() + slack)[0])
    return distances_from(g, vmax)[vmin]


def batch_principal_eigenpairs(adj: np.ndarray) -> tuple:
    """Principal eigenpairs of a stack of symmetric adjacency matrices.

    ``adj`` has shape ``(B, n, n)``. Returns ``(lam, x)`` with ``x`` of shape
    ``(B, n)``, unit norm, sign fixed so entries sum positive. Used for
    exhaustive scans where per-graph iteration would dominate the runtime.
    """
    w, v = np.linalg.eigh(adj)
    lam = w[:, -1]
    x = v[:, :, -1]
    x = x * np.where(x.sum(axis=1) < 0, -1.0, 1.0)[:, None]
    return lam, x
