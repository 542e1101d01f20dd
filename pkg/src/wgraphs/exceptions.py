"""Exception hierarchy shared by all graph modules.

Every error derives from :class:`GraphError`, itself a ``ValueError``, so
callers can catch the whole family or a single failure mode.
"""


class GraphError(ValueError):
    """Base class for all errors raised by wgraphs."""


class InvalidEdgeError(GraphError):
    """Edge violates the simple-graph rules (e.g. a loop)."""


class DuplicateEdgeError(GraphError):
    """Edge is already present in the graph."""


class MissingNodeError(GraphError):
    """Node is not present in the graph."""


class MissingEdgeError(GraphError):
    """Edge is not present in the graph."""


class WrongModeError(GraphError):
    """Operation is not defined for a directed (or undirected) graph."""


class CyclicGraphError(GraphError):
    """A directed cycle was found where an acyclic graph is required."""


class NegativeCycleError(GraphError):
    """A negative-weight cycle makes shortest paths undefined."""


class NegativeWeightError(GraphError):
    """An edge weight is negative where only non-negative ones are allowed."""


class NoPathError(GraphError):
    """Target is not reachable from the source."""


class ShapeError(GraphError):
    """Distance matrices are indexed by different node sets."""


class AlreadyPresentError(GraphError):
    """Element was already created in a disjoint-set structure."""


class MissingElementError(GraphError):
    """Element was never created in a disjoint-set structure."""


class InvalidSpecError(GraphError):
    """Generator parameters are out of range or inconsistent."""


class InstanceTooLargeError(GraphError):
    """Exhaustive oracle refused an instance above its size limit."""


class DisconnectedGraphError(GraphError):
    """A connected graph was required."""


class FormatError(GraphError):
    """Malformed edge-list input."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class UnknownAlgorithmError(GraphError):
    """Algorithm name is not registered."""
