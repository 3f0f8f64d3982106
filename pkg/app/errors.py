"""Typed failures raised by the library; the CLI maps them to exit codes."""

from __future__ import annotations


class PlanarError(Exception):
    """Root of every library error."""


class GraphError(PlanarError, ValueError):
    """Malformed graph: asymmetric adjacency, loops, duplicates, disconnection."""


class CycleError(PlanarError, ValueError):
    """An edge set or vertex sequence that is not a simple cycle of the graph."""


class EmbeddingError(PlanarError):
    """Rotation stitching or embedding verification failed."""


class SolverError(PlanarError):
    """The spring system is singular or the residual check failed."""


class BudgetExceeded(PlanarError):
    """Structural-number enumeration ran past its transversal budget."""

    def __init__(self, budget: int):
        super().__init__(f"transversal budget {budget} exceeded")
        self.budget = budget


class FormatError(PlanarError, ValueError):
    """Parser diagnostic with a file position."""

    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where = f"{where}{line}:"
        super().__init__(f"{where} {message}".strip() if where else message)
        self.path = path
        self.line = line
        self.reason = message
