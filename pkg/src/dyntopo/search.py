"""Depth-first reachability over the acyclic edges only.

Both searches take any object exposing ``rep`` (a Representation) and
``store`` (an AdjacencyStore).  Cyclic edges are never followed.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import UnknownVertex


class ReachResult(NamedTuple):
    hit_goal: bool
    visited: set


def forward_reach(graph, start, upper_bound: int | None = None, goal=None) -> ReachResult:
    """Vertices reachable from ``start`` through slots ``<= upper_bound``.

    Returns as soon as ``goal`` is found, so ``visited`` is partial in that case.
    """
    rep, store = graph.rep, graph.store
    index = rep._index
    if start not in index or start not in store:
        raise UnknownVertex(start)
    if upper_bound is None:
        upper_bound = len(rep) - 1
    succ = store._out
    visited = {start}
    if goal is not None and start == goal:
        return ReachResult(True, visited)
    stack = [start]
    while stack:
        u = stack.pop()
        for w in succ[u]:
            if w in visited or index[w] > upper_bound:
                continue
            visited.add(w)
            if w == goal:
                return ReachResult(True, visited)
            stack.append(w)
    return ReachResult(False, visited)


def backward_reach(graph, start, lower_bound: int = 0) -> ReachResult:
    """Vertices with an acyclic path to ``start`` through slots ``>= lower_bound``."""
    rep, store = graph.rep, graph.store
    index = rep._index
    if start not in index or start not in store:
        raise UnknownVertex(start)
    pred = store._in
    visited = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in pred[u]:
            if w in visited or index[w] < lower_bound:
                continue
            visited.add(w)
            stack.append(w)
    return ReachResult(False, visited)
