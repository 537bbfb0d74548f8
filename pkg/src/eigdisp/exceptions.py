class GraphError(ValueError):
    """Invalid graph input or a parameter outside a constructor's domain."""


class DisconnectedGraphError(GraphError):
    pass


class ConvergenceError(RuntimeError):
    """Power iteration did not reach the residual tolerance."""

    def __init__(self, message, residual, iterations):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations
