"""Edge storage split into the acyclic adjacency views and the cyclic edge list."""

from __future__ import annotations

import enum
from typing import Iterator, NamedTuple

from .errors import DuplicateEdge, UnknownEdge, UnknownVertex


class Edge(NamedTuple):
    source: int
    target: int


class EdgeClass(enum.Enum):
    ACYCLIC = "acyclic"
    CYCLIC = "cyclic"

    def __str__(self) -> str:
        return self.value


ACYCLIC = EdgeClass.ACYCLIC
CYCLIC = EdgeClass.CYCLIC


class AdjacencyStore:
    # dicts with None values serve as insertion-ordered sets
    __slots__ = ("_out", "_in", "_cyclic")

    def __init__(self):
        self._out: dict[int, dict[int, None]] = {}
        self._in: dict[int, dict[int, None]] = {}
        self._cyclic: dict[Edge, None] = {}

    def copy(self) -> AdjacencyStore:
        other = AdjacencyStore()
        other._out = {u: dict(ws) for u, ws in self._out.items()}
        other._in = {u: dict(ws) for u, ws in self._in.items()}
        other._cyclic = dict(self._cyclic)
        return other

    def __contains__(self, v) -> bool:
        return v in self._out

    def vertices(self) -> list[int]:
        return list(self._out)

    def add_vertex(self, v) -> None:
        self._out.setdefault(v, {})
        self._in.setdefault(v, {})

    def discard_vertex(self, v) -> None:
        """Drop an isolated vertex.  Incident edges must already be gone."""
        if self._out.get(v) or self._in.get(v):
            raise ValueError(f"vertex {v!r} still has acyclic edges")
        self._out.pop(v, None)
        self._in.pop(v, None)

    def _require(self, v) -> None:
        if v not in self._out:
            raise UnknownVertex(v)

    def insert_edge_record(self, e: Edge, c: EdgeClass) -> None:
        e = Edge(*e)
        self._require(e.source)
        self._require(e.target)
        if self.edge_class(e) is not None:
            raise DuplicateEdge(e)
        if c is EdgeClass.ACYCLIC:
            self._out[e.source][e.target] = None
            self._in[e.target][e.source] = None
        elif c is EdgeClass.CYCLIC:
            self._cyclic[e] = None
        else:
            raise TypeError(f"not an EdgeClass: {c!r}")

    def delete_edge_record(self, e: Edge) -> EdgeClass:
        e = Edge(*e)
        succ = self._out.get(e.source)
        if succ is not None and e.target in succ:
            del succ[e.target]
            del self._in[e.target][e.source]
            return EdgeClass.ACYCLIC
        if e in self._cyclic:
            del self._cyclic[e]
            return EdgeClass.CYCLIC
        raise UnknownEdge(e)

    def edge_class(self, e: Edge) -> EdgeClass | None:
        source, target = e
        succ = self._out.get(source)
        if succ is not None and target in succ:
            return EdgeClass.ACYCLIC
        if (source, target) in self._cyclic:
            return EdgeClass.CYCLIC
        return None

    def out_neighbors_acyclic(self, u) -> list[int]:
        self._require(u)
        return list(self._out[u])

    def in_neighbors_acyclic(self, v) -> list[int]:
        self._require(v)
        return list(self._in[v])

    def cyclic_edges(self) -> list[Edge]:
        return list(self._cyclic)

    def cyclic_count(self) -> int:
        return len(self._cyclic)

    # Uncopied views for the search hot path; callers must not mutate them.
    def successors(self, u):
        return self._out[u].keys()

    def predecessors(self, v):
        return self._in[v].keys()

    def acyclic_edges(self) -> Iterator[Edge]:
        for u, ws in self._out.items():
            for w in ws:
                yield Edge(u, w)

    def edges(self) -> Iterator[Edge]:
        yield from self.acyclic_edges()
        yield from self._cyclic
