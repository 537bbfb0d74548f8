import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .clustering import clustering_report
from .dispersion import dispersion_report
from .spectral import DEFAULT_TOL
from .validation import check_connected, check_graphs

__all__ = ["DispersionTransformer"]

_SPECTRAL = ("lambda", "gamma", "gamma_sq_minus_1", "c_e", "c_d", "Gamma")
_CLUSTERING = ("average_clustering", "transitivity")


class DispersionTransformer(TransformerMixin, BaseEstimator):
    """Map graphs to rows of dispersion statistics.

    Stateless: ``fit`` only validates input. Each row of ``transform(X)``
    holds ``lambda, gamma, gamma^2 - 1, c_e, c_d, Gamma`` and, with
    ``clustering=True``, average clustering and transitivity (NaN where
    undefined).

    Parameters
    ----------
    tol : float
        Residual tolerance for power iteration.
    max_iter : int or None
        Iteration cap; ``None`` uses the size-dependent default.
    clustering : bool
        Append the clustering columns.

    Examples
    --------
    >>> from eigdisp.families import star
    >>> round(float(DispersionTransformer().fit_transform([star(4)])[0, 1]), 9)  # gamma
    2.0
    """

    def __init__(self, tol=DEFAULT_TOL, max_iter=None, clustering=False):
        self.tol = tol
        self.max_iter = max_iter
        self.clustering = clustering

    def fit(self, X, y=None):
        graphs = check_graphs(X)
        for g in graphs:
            check_connected(g)
        self.n_graphs_seen_ = len(graphs)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_graphs_seen_")
        graphs = [check_connected(g) for g in check_graphs(X)]
        rows = []
        for g in graphs:
            rep = dispersion_report(g, tol=self.tol, max_iter=self.max_iter)
            row = [rep.lam, rep.gamma, rep.gamma_sq_minus_1, rep.c_e, float(rep.c_d), rep.Gamma]
            if self.clustering:
                cr = clustering_report(g)
                trans = np.nan if cr.transitivity is None else float(cr.transitivity)
                row += [float(cr.average), trans]
            rows.append(row)
        width = len(self.get_feature_names_out())
        return np.array(rows, dtype=float).reshape(len(rows), width)

    def get_feature_names_out(self, input_features=None):
        names = _SPECTRAL + (_CLUSTERING if self.clustering else ())
        return np.array(names, dtype=object)
