"""Principal-eigenvector and degree dispersion statistics for graphs."""

from .closed_form import FamilyStats, Limit, LimitRecord, family_stats, limits_report
from .clustering import ClusteringReport, average_clustering, clustering_report, transitivity
from .dispersion import DispersionReport, c_d, c_e, cv_squared, dispersion_report, gamma_indicator
from .estimator import DispersionTransformer
from .exceptions import ConvergenceError, DisconnectedGraphError, GraphError
from .extremal import Objective, SearchResult, search
from .families import FamilyKind, FamilySpec, realize
from .graph import DegreeMultiset, Graph, build, cartesian_power, cartesian_product
from .graph6 import graph6_decode, graph6_encode
from .spectral import EigenPair, principal_eigenpair, principal_ratio

__version__ = "0.1.0"

__all__ = [
    "ClusteringReport",
    "ConvergenceError",
    "DegreeMultiset",
    "DisconnectedGraphError",
    "DispersionReport",
    "DispersionTransformer",
    "EigenPair",
    "FamilyKind",
    "FamilySpec",
    "FamilyStats",
    "Graph",
    "GraphError",
    "Limit",
    "LimitRecord",
    "Objective",
    "SearchResult",
    "average_clustering",
    "build",
    "c_d",
    "c_e",
    "cartesian_power",
    "cartesian_product",
    "clustering_report",
    "cv_squared",
    "dispersion_report",
    "family_stats",
    "gamma_indicator",
    "graph6_decode",
    "graph6_encode",
    "principal_eigenpair",
    "principal_ratio",
    "realize",
    "search",
    "limits_report",
    "transitivity",
]
