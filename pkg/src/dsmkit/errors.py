"""Exception hierarchy shared across the toolkit."""


class DsmError(Exception):
    """Base class for all toolkit errors."""


class GraphConstructionError(DsmError):
    """Invalid edge list or graph parameters."""


class SelfLoopError(GraphConstructionError):
    def __init__(self, node: int):
        super().__init__(f"self-loop on node {node}")
        self.node = node


class DuplicateEdgeError(GraphConstructionError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.edge = (u, v)


class IndexOutOfRangeError(GraphConstructionError):
    def __init__(self, index: int, n: int):
        super().__init__(f"node index {index} out of range for n={n}")
        self.index = index
        self.n = n


class InvalidParamsError(DsmError):
    """Generator parameters violate a model constraint."""


class DimensionMismatchError(DsmError):
    """Feature matrix shape incompatible with the graph."""


class OracleCapExceededError(DsmError):
    """A dense O(n^3) path was requested above the configured node cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"graph has n={n} nodes, above the dense oracle cap {cap}")
        self.n = n
        self.cap = cap


class NoConvergenceError(DsmError):
    """An iterative solver hit its iteration cap before converging."""


class DegenerateSpectrumError(DsmError):
    """The deflated power iteration collapsed; mu_2 cannot be separated."""


class NegativeEigenvalueError(DsmError):
    """A Laplacian eigenvalue fell below the negative tolerance."""


class DegenerateInputError(DsmError):
    """Rank correlation on a constant array (tie-corrected denominator 0)."""
