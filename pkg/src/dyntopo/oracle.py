"""From-scratch batch topological sort used to cross-check the incremental graph.

Nothing here imports the incremental machinery; ``differential_check`` only
talks to a graph through its public query methods.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import DanglingEdge


@dataclass(frozen=True)
class BatchResult:
    ordering: list | None
    cyclic: bool
    closure: frozenset | None = None


def batch_toposort(vertices, edges, *, closure: bool = True) -> BatchResult:
    """Kahn's elimination with a min-heap, so ties go to the smallest vertex.

    ``closure`` holds every pair (u, w) joined by a path of length >= 1.
    Skip it with ``closure=False`` when only the ordering is wanted.
    """
    vertices = list(vertices)
    succ: dict = {v: [] for v in vertices}
    indegree = dict.fromkeys(vertices, 0)
    for u, w in edges:
        if u not in succ or w not in succ:
            raise DanglingEdge((u, w))
        succ[u].append(w)
        indegree[w] += 1

    heap = [v for v, d in indegree.items() if d == 0]
    heapq.heapify(heap)
    ordering = []
    while heap:
        u = heapq.heappop(heap)
        ordering.append(u)
        for w in succ[u]:
            indegree[w] -= 1
            if indegree[w] == 0:
                heapq.heappush(heap, w)
    cyclic = len(ordering) != len(vertices)

    pairs = None
    if closure:
        found = set()
        for v in vertices:
            seen = set()
            stack = list(succ[v])
            while stack:
                w = stack.pop()
                if w in seen:
                    continue
                seen.add(w)
                stack.extend(succ[w])
            found.update((v, w) for w in seen)
        pairs = frozenset(found)
    return BatchResult(None if cyclic else ordering, cyclic, pairs)


def is_valid_ordering(ordering, vertices, edges) -> bool:
    ordering = list(ordering)
    position = {v: i for i, v in enumerate(ordering)}
    if len(position) != len(ordering) or set(position) != set(vertices):
        return False
    return all(position[u] < position[w] for u, w in edges)


def differential_check(g) -> list[str]:
    """Compare a DynamicGraph against batch recomputation over its raw edges."""
    problems = []
    vertices = g.vertices()
    edges = [tuple(e) for e in g.edges()]
    full = batch_toposort(vertices, edges, closure=False)

    if full.cyclic != g.has_cycles():
        problems.append(f"cycle-agreement: batch={full.cyclic} incremental={g.has_cycles()}")
    if not full.cyclic and not g.has_cycles():
        ordering = g.topological_ordering()
        if not is_valid_ordering(ordering, vertices, edges):
            problems.append(f"order-validity: {ordering!r} violates {edges!r}")

    acyclic = [tuple(e) for e in g.acyclic_edges()]
    under = batch_toposort(vertices, acyclic)
    if under.cyclic:
        problems.append("acyclic-part: acyclic-classified edges contain a cycle")
    expected: dict = {v: set() for v in vertices}
    for u, w in under.closure:
        expected[u].add(w)
    for u in vertices:
        got = g.reachable_from(u) - {u}
        if got != expected[u]:
            problems.append(f"reachability: from {u!r} got {sorted(got)} want {sorted(expected[u])}")
    return problems
