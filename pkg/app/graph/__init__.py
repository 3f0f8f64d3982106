from app.graph.core import (
    Graph,
    SpanningTreeSplit,
    ValidationReport,
    require_biconnected,
    spanning_split,
    validate_nonseparable,
)

__all__ = [
    "Graph",
    "SpanningTreeSplit",
    "ValidationReport",
    "require_biconnected",
    "spanning_split",
    "validate_nonseparable",
]
