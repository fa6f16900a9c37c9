"""Incremental topological ordering of directed graphs that tolerates cycles."""

from .errors import (
    CyclicError,
    DanglingEdge,
    DuplicateEdge,
    DuplicateVertex,
    GraphError,
    IndexOutOfRange,
    OverlappingPools,
    ParseError,
    SemanticError,
    UnknownEdge,
    UnknownVertex,
    UnsortedPool,
)
from .graph import DynamicGraph, PromotionReport, Violation
from .oracle import BatchResult, batch_toposort, differential_check, is_valid_ordering
from .representation import Representation
from .search import ReachResult, backward_reach, forward_reach
from .store import ACYCLIC, CYCLIC, AdjacencyStore, Edge, EdgeClass
from .trace import TraceOp, bench_compare, execute_trace, export_dot, parse_trace

__version__ = "0.1.0"

__all__ = [
    "ACYCLIC",
    "AdjacencyStore",
    "BatchResult",
    "CYCLIC",
    "CyclicError",
    "DanglingEdge",
    "DuplicateEdge",
    "DuplicateVertex",
    "DynamicGraph",
    "Edge",
    "EdgeClass",
    "GraphError",
    "IndexOutOfRange",
    "OverlappingPools",
    "ParseError",
    "PromotionReport",
    "ReachResult",
    "Representation",
    "SemanticError",
    "TraceOp",
    "UnknownEdge",
    "UnknownVertex",
    "UnsortedPool",
    "Violation",
    "backward_reach",
    "batch_toposort",
    "bench_compare",
    "differential_check",
    "execute_trace",
    "export_dot",
    "forward_reach",
    "is_valid_ordering",
    "parse_trace",
]
