"""Input coercion shared by the estimator, the CLI and the public functions."""

import numbers

import numpy as np

from .exceptions import DisconnectedGraphError, GraphError
from .graph import Graph, build, is_connected
from .graph6 import graph6_decode

__all__ = ["check_graph", "check_graphs", "check_connected", "check_int"]


def check_int(value, name: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise GraphError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise GraphError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def _from_matrix(a) -> Graph:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise GraphError(f"adjacency matrix must be square, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise GraphError("adjacency matrix must be symmetric")
    if np.any(np.diag(a) != 0):
        raise GraphError("adjacency matrix has self-loops")
    if not np.all((a == 0) | (a == 1)):
        raise GraphError("adjacency matrix entries must be 0 or 1")
    iu, ju = np.nonzero(np.triu(a, 1))
    return build(a.shape[0], zip(iu.tolist(), ju.tolist()))


def check_graph(obj) -> Graph:
    """Coerce ``obj`` to a :class:`Graph`.

    Accepts a Graph, a graph6 string, an ``(n, edge_list)`` pair or a square
    0/1 adjacency matrix.
    """
    if isinstance(obj, Graph):
        return obj
    if isinstance(obj, (str, bytes)):
        return graph6_decode(obj.decode("ascii") if isinstance(obj, bytes) else obj)
    if isinstance(obj, tuple) and len(obj) == 2 and isinstance(obj[0], numbers.Integral):
        return build(obj[0], obj[1])
    if isinstance(obj, (np.ndarray, list)):
        return _from_matrix(obj)
    raise GraphError(f"cannot interpret {type(obj).__name__} as a graph")


def check_graphs(X) -> list:
    if isinstance(X, (str, Graph)):
        raise GraphError("expected a collection of graphs, got a single graph")
    return [check_graph(item) for item in X]


def check_connected(g: Graph) -> Graph:
    if not is_connected(g):
        raise DisconnectedGraphError(f"graph {g!r} is not connected")
    return g
