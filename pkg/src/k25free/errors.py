"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class Graph6Error(GraphError, ValueError):
    """A graph6 string could not be decoded."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class IngestError(GraphError, ValueError):
    """A line of a graph stream or edge-list file could not be read."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class CapabilityError(GraphError):
    """The input exceeds a documented size limit of a search routine."""


class PreconditionError(GraphError, ValueError):
    """An argument violates the documented precondition of an operation."""


class HypothesisError(GraphError):
    """A graph does not satisfy the hypotheses a checker requires."""


class NotApplicableError(GraphError):
    """The construction is not defined for this particular input."""


class ClaimViolation(GraphError):
    """A structural claim expected to hold for every valid input failed.

    The offending graph is kept on ``graph`` so it can be re-checked.
    """

    def __init__(self, message: str, graph):
        super().__init__(message)
        self.graph = graph
