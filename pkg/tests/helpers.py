"""Shared builders and independent brute-force checks for the test suite."""

from __future__ import annotations

import itertools
import random

from dyntopo import DynamicGraph


def build(order, edges=()):
    """Graph whose representation starts as ``order`` (names), then ``edges`` added."""
    g = DynamicGraph()
    ids = {name: g.add_vertex() for name in order}
    for u, v in edges:
        g.add_edge(ids[u], ids[v])
    return g, ids


def names_of(g, ids):
    back = {v: k for k, v in ids.items()}
    return [back[v] for v in g.vertices()]


def brute_closure(vertices, edges):
    """Warshall's algorithm over an adjacency matrix: pairs joined by a path of length >= 1."""
    vs = list(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    r = [[False] * n for _ in range(n)]
    for u, w in edges:
        r[pos[u]][pos[w]] = True
    for k in range(n):
        for i in range(n):
            if r[i][k]:
                for j in range(n):
                    if r[k][j]:
                        r[i][j] = True
    return {(vs[i], vs[j]) for i in range(n) for j in range(n) if r[i][j]}


def brute_has_cycle(vertices, edges):
    return any(u == w for u, w in brute_closure(vertices, edges))


def valid_orders(vertices, edges):
    """Every permutation of ``vertices`` in which each edge points forward."""
    for perm in itertools.permutations(vertices):
        pos = {v: i for i, v in enumerate(perm)}
        if all(pos[u] < pos[w] for u, w in edges):
            yield list(perm)


def random_ops(rng: random.Random, length: int, max_vertices: int):
    """Mixed mutation sequence as tuples over trace-style names.

    Yields ('node', name), ('delnode', name), ('edge', u, v), ('deledge', u, v);
    every op is valid at the point it is produced.
    """
    live: list[str] = []
    edges: list[tuple[str, str]] = []
    counter = 0
    ops = []
    for _ in range(length):
        r = rng.random()
        if not live or (r < 0.15 and len(live) < max_vertices):
            name = f"v{counter}"
            counter += 1
            live.append(name)
            ops.append(("node", name))
        elif r < 0.22 and live:
            name = rng.choice(live)
            live.remove(name)
            edges = [e for e in edges if name not in e]
            ops.append(("delnode", name))
        elif r < 0.45 and edges:
            e = rng.choice(edges)
            edges.remove(e)
            ops.append(("deledge",) + e)
        else:
            u, v = rng.choice(live), rng.choice(live)
            if rng.random() < 0.9 and u == v and len(live) > 1:
                continue
            if (u, v) not in edges:
                edges.append((u, v))
            ops.append(("edge", u, v))
    return ops


def apply(g, ids, op):
    kind = op[0]
    if kind == "node":
        ids[op[1]] = g.add_vertex()
        return None
    if kind == "delnode":
        return g.remove_vertex(ids.pop(op[1]))
    if kind == "edge":
        return g.add_edge(ids[op[1]], ids[op[2]])
    return g.remove_edge(ids[op[1]], ids[op[2]])
