"""Dynamic topological ordering that tolerates cycles.

The graph is stored as a topological representation: every acyclic edge
points from a lower slot to a higher one.  An edge whose insertion would
close a cycle in the acyclic part is kept anyway, classified cyclic, and
stored right-to-left.  Removing an acyclic edge triggers a rescan of the
cyclic edges, and any that no longer close a cycle are promoted back into
the acyclic part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, NamedTuple

from .errors import CyclicError, UnknownEdge, UnknownVertex
from .representation import Representation
from .search import backward_reach, forward_reach
from .store import ACYCLIC, CYCLIC, AdjacencyStore, Edge, EdgeClass

#: Called as ``listener(source_set, target_set, before)`` after each reorder,
#: where ``before`` maps every moved vertex to its slot prior to the move.
ReorderListener = Callable[[list, list, dict], None]


@dataclass
class PromotionReport:
    promoted: list[Edge] = field(default_factory=list)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.promoted)

    def __len__(self) -> int:
        return len(self.promoted)

    def __bool__(self) -> bool:
        return bool(self.promoted)


class Violation(NamedTuple):
    invariant: str
    witness: object


class DynamicGraph:
    """Directed graph with an always-available topological representation.

    >>> g = DynamicGraph()
    >>> a, b = g.add_vertex(), g.add_vertex()
    >>> g.add_edge(a, b), g.add_edge(b, a)
    (<EdgeClass.ACYCLIC: 'acyclic'>, <EdgeClass.CYCLIC: 'cyclic'>)
    >>> g.remove_edge(a, b).promoted
    [Edge(source=1, target=0)]
    >>> g.topological_ordering()
    [1, 0]
    """

    def __init__(self):
        self.rep = Representation()
        self.store = AdjacencyStore()
        self._next_id = 0
        self.reorder_listener: ReorderListener | None = None
        self.reorder_count = 0

    def __len__(self) -> int:
        return len(self.rep)

    def __contains__(self, v) -> bool:
        return v in self.rep

    def copy(self) -> DynamicGraph:
        other = DynamicGraph()
        other.rep = self.rep.copy()
        other.store = self.store.copy()
        other._next_id = self._next_id
        return other

    def vertices(self) -> list[int]:
        """Live vertices in representation order."""
        return self.rep.order()

    def edges(self) -> list[Edge]:
        return list(self.store.edges())

    def acyclic_edges(self) -> list[Edge]:
        return list(self.store.acyclic_edges())

    def cyclic_edges(self) -> list[Edge]:
        return self.store.cyclic_edges()

    def edge_class(self, u, v) -> EdgeClass | None:
        return self.store.edge_class((u, v))

    def index_of(self, v) -> int:
        return self.rep.index_of(v)

    # -- mutation ---------------------------------------------------------

    def add_vertex(self) -> int:
        v = self._next_id
        self._next_id += 1
        self.rep.append_vertex(v)
        self.store.add_vertex(v)
        return v

    def add_edge(self, u, v) -> EdgeClass:
        self._require(u)
        self._require(v)
        existing = self.store.edge_class((u, v))
        if existing is not None:
            return existing
        c = self._place(u, v)
        self.store.insert_edge_record(Edge(u, v), c)
        return c

    def remove_edge(self, u, v) -> PromotionReport:
        e = Edge(u, v)
        if self.store.edge_class(e) is None:
            raise UnknownEdge(e)
        if self.store.delete_edge_record(e) is CYCLIC:
            # acyclic part untouched, so no classification can change
            return PromotionReport()
        return PromotionReport(self.rescan())

    def remove_vertex(self, v) -> PromotionReport:
        self._require(v)
        store = self.store
        for w in list(store.successors(v)):
            store.delete_edge_record((v, w))
        for w in list(store.predecessors(v)):
            store.delete_edge_record((w, v))
        for e in store.cyclic_edges():
            if v in e:
                store.delete_edge_record(e)
        store.discard_vertex(v)
        self.rep.remove_vertex_slot(v)
        return PromotionReport(self.rescan())

    def rescan(self) -> list[Edge]:
        """One pass over the cyclic edges in insertion order, promoting what it can.

        Promotions take effect at once, so later checks in the same pass see
        them.  Returns the promoted edges.
        """
        promoted = []
        store = self.store
        for e in store.cyclic_edges():
            s, t = e
            if s == t or self._closes_cycle(s, t):
                continue
            store.delete_edge_record(e)
            c = self._place(s, t)
            assert c is ACYCLIC
            store.insert_edge_record(e, ACYCLIC)
            promoted.append(e)
        return promoted

    def _closes_cycle(self, u, v) -> bool:
        """Whether ``u`` is reachable from ``v`` along acyclic edges."""
        iu, iv = self.rep._index[u], self.rep._index[v]
        if iv > iu:
            return False
        return forward_reach(self, v, iu, goal=u).hit_goal

    def _place(self, u, v) -> EdgeClass:
        """Classify the prospective edge u->v and reorder so it fits if acyclic.

        Does not record the edge.
        """
        if u == v:
            return CYCLIC
        index = self.rep._index
        iu, iv = index[u], index[v]
        if iu < iv:
            return ACYCLIC
        fwd = forward_reach(self, v, iu, goal=u)
        if fwd.hit_goal:
            return CYCLIC
        bwd = backward_reach(self, u, iv)
        key = index.__getitem__
        source_set = sorted(bwd.visited, key=key)
        target_set = sorted(fwd.visited, key=key)
        before = None
        if self.reorder_listener is not None:
            before = {w: index[w] for w in source_set + target_set}
        self.rep.reassign_pool(source_set, target_set)
        self.reorder_count += 1
        if before is not None:
            self.reorder_listener(source_set, target_set, before)
        return ACYCLIC

    def _require(self, v) -> None:
        if v not in self.rep:
            raise UnknownVertex(v)

    # -- queries ----------------------------------------------------------

    def topological_ordering(self) -> list[int]:
        count = self.store.cyclic_count()
        if count:
            raise CyclicError(count)
        return self.rep.order()

    def is_reachable_acyclic(self, u, v) -> bool:
        self._require(v)
        return forward_reach(self, u, None, goal=v).hit_goal

    def reachable_from(self, u) -> set:
        """All vertices reachable from ``u`` along acyclic edges, ``u`` included."""
        return forward_reach(self, u).visited

    def has_cycles(self) -> bool:
        return self.store.cyclic_count() > 0

    def cyclic_edge_count(self) -> int:
        return self.store.cyclic_count()

    def check_invariants(self) -> list[Violation]:
        """Audit every structural invariant; an empty list means all hold."""
        out: list[Violation] = []
        order, index = self.rep._order, self.rep._index
        store = self.store

        if len(order) != len(index):
            out.append(Violation("bijection", (len(order), len(index))))
        for i, v in enumerate(order):
            if index.get(v) != i:
                out.append(Violation("bijection", (i, v)))
        if sorted(index.values()) != list(range(len(index))):
            out.append(Violation("contiguity", sorted(index.values())))
        if set(store._out) != set(index) or set(store._in) != set(index):
            out.append(Violation("vertex-set", set(store._out) ^ set(index)))

        for u, ws in store._out.items():
            for w in ws:
                if u not in store._in.get(w, ()):
                    out.append(Violation("mirror", (u, w)))
        for w, us in store._in.items():
            for u in us:
                if w not in store._out.get(u, ()):
                    out.append(Violation("mirror", (u, w)))
        for e in store._cyclic:
            if e.target in store._out.get(e.source, ()):
                out.append(Violation("partition", e))
            if e.source not in index or e.target not in index:
                out.append(Violation("vertex-set", e))
        if out:
            return out

        for e in store.acyclic_edges():
            if index[e.source] >= index[e.target]:
                out.append(Violation("I1", e))
        for e in store._cyclic:
            if not forward_reach(self, e.target, None, goal=e.source).hit_goal:
                out.append(Violation("I2", e))
        if _has_cycle(index, store.edges()) != bool(store._cyclic):
            out.append(Violation("I3", store.cyclic_count()))
        return out


def _has_cycle(vertices, edges) -> bool:
    indegree = dict.fromkeys(vertices, 0)
    succ: dict = {v: [] for v in vertices}
    for u, w in edges:
        succ[u].append(w)
        indegree[w] += 1
    ready = [v for v, d in indegree.items() if d == 0]
    seen = 0
    while ready:
        u = ready.pop()
        seen += 1
        for w in succ[u]:
            indegree[w] -= 1
            if indegree[w] == 0:
                ready.append(w)
    return seen != len(indegree)
