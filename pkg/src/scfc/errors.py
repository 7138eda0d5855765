"""Exception types shared across the package."""


class ScfcError(Exception):
    """Base class for all package errors."""


class SelfLoopError(ScfcError):
    pass


class DuplicateEdgeError(ScfcError):
    pass


class VertexRangeError(ScfcError):
    pass


class MalformedGraph6Error(ScfcError):
    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class GraphIoError(ScfcError):
    pass


class DisconnectedError(ScfcError):
    pass


class TrivialGraphError(ScfcError):
    pass


class NotAPathError(ScfcError):
    pass


class NotATreeError(ScfcError):
    pass


class NotATriangleError(ScfcError):
    pass


class NotEdgeDisjointError(ScfcError):
    pass


class InvalidParamsError(ScfcError):
    pass


class TooLargeError(ScfcError):
    pass


class OddOrderError(ScfcError):
    pass


class ConstructionFailedError(ScfcError):
    """A recipe coloring failed its mandatory self-verification."""


class SearchBudgetExceededError(ScfcError):
    """Exact search hit its node budget before resolving the instance."""

    def __init__(self, nodes):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes
