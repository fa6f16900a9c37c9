"""Exception hierarchy shared by every layer of the package."""


class GraphError(Exception):
    pass


class DuplicateVertex(GraphError):
    pass


class UnknownVertex(GraphError, LookupError):
    pass


class IndexOutOfRange(GraphError, IndexError):
    pass


class OverlappingPools(GraphError, ValueError):
    pass


class UnsortedPool(GraphError, ValueError):
    pass


class DuplicateEdge(GraphError):
    pass


class UnknownEdge(GraphError, LookupError):
    pass


class DanglingEdge(GraphError, ValueError):
    pass


class CyclicError(GraphError):
    """Raised when an ordering is requested while cyclic edges exist."""

    def __init__(self, count: int):
        super().__init__(f"graph has {count} cyclic edge(s)")
        self.count = count


class TraceError(Exception):
    exit_code = 1

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class ParseError(TraceError):
    exit_code = 1


class SemanticError(TraceError):
    exit_code = 2
