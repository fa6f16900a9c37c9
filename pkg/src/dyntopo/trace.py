"""Plain-text operation traces: parsing, replay, DOT export and benchmarking.

Trace grammar, one operation per line (``#`` comments and blank lines skipped)::

    node NAME          delnode NAME
    edge U V           deledge U V
    reach U V          order          check
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import CyclicError, ParseError, SemanticError
from .graph import DynamicGraph
from .oracle import batch_toposort, is_valid_ordering

ARITY = {
    "node": 1,
    "delnode": 1,
    "edge": 2,
    "deledge": 2,
    "order": 0,
    "reach": 2,
    "check": 0,
}
MUTATIONS = ("node", "delnode", "edge", "deledge")


class TraceOp(NamedTuple):
    kind: str
    args: tuple
    line: int = 0

    def __str__(self) -> str:
        return " ".join((self.kind,) + self.args)


def parse_trace(text: str) -> list[TraceOp]:
    ops = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        words = raw.split()
        if not words or words[0].startswith("#"):
            continue
        kind, args = words[0], tuple(words[1:])
        if kind not in ARITY:
            raise ParseError(lineno, f"unknown keyword {kind!r}")
        if len(args) != ARITY[kind]:
            raise ParseError(lineno, f"{kind} takes {ARITY[kind]} argument(s), got {len(args)}")
        ops.append(TraceOp(kind, args, lineno))
    return ops


class Replayer:
    """Applies trace operations to one DynamicGraph, translating names to ids."""

    def __init__(self):
        self.graph = DynamicGraph()
        self.ids: dict[str, int] = {}
        self.names: dict[int, str] = {}
        self.check_failed = False
        self.promotions = 0

    def _id(self, op: TraceOp, name: str) -> int:
        try:
            return self.ids[name]
        except KeyError:
            raise SemanticError(op.line, f"unknown node {name!r}") from None

    def _promotions(self, report) -> list[str]:
        self.promotions += len(report)
        return [f"promoted {self.names[s]} {self.names[t]}" for s, t in report]

    def execute(self, op: TraceOp) -> list[str]:
        """Apply one op and return the output lines it produces."""
        g = self.graph
        kind = op.kind
        if kind == "node":
            (name,) = op.args
            if name in self.ids:
                raise SemanticError(op.line, f"duplicate node {name!r}")
            v = g.add_vertex()
            self.ids[name] = v
            self.names[v] = name
            return []
        if kind == "delnode":
            v = self._id(op, op.args[0])
            report = g.remove_vertex(v)
            del self.ids[op.args[0]]
            lines = self._promotions(report)
            del self.names[v]
            return lines
        if kind == "edge":
            u, v = (self._id(op, a) for a in op.args)
            c = g.add_edge(u, v)
            return [f"edge {op.args[0]} {op.args[1]} {c}"]
        if kind == "deledge":
            u, v = (self._id(op, a) for a in op.args)
            if g.edge_class(u, v) is None:
                raise SemanticError(op.line, f"unknown edge {op.args[0]} -> {op.args[1]}")
            return self._promotions(g.remove_edge(u, v))
        if kind == "order":
            try:
                ordering = g.topological_ordering()
            except CyclicError as exc:
                return [f"cyclic {exc.count}"]
            return [" ".join(["order"] + [self.names[v] for v in ordering])]
        if kind == "reach":
            u, v = (self._id(op, a) for a in op.args)
            verdict = "true" if g.is_reachable_acyclic(u, v) else "false"
            return [f"reach {op.args[0]} {op.args[1]} {verdict}"]
        if kind == "check":
            violations = g.check_invariants()
            if not violations:
                return ["check ok"]
            self.check_failed = True
            return [f"check FAIL {violations[0].invariant}"]
        raise SemanticError(op.line, f"unsupported op {kind!r}")

    def run(self, ops: Iterable[TraceOp]) -> list[str]:
        lines = []
        for op in ops:
            lines.extend(self.execute(op))
        return lines


def execute_trace(ops: Iterable[TraceOp]) -> str:
    lines = Replayer().run(ops)
    return "".join(line + "\n" for line in lines)


_PLAIN_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|-?(\.[0-9]+|[0-9]+(\.[0-9]*)?)")


def _dot_id(name: str) -> str:
    if _PLAIN_ID.fullmatch(name) and name.lower() not in ("node", "edge", "graph", "digraph", "subgraph", "strict"):
        return name
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: DynamicGraph, names: dict | None = None) -> str:
    """DOT text for ``g``; cyclic edges are dashed.

    Vertices come out in representation order, then acyclic edges grouped by
    source in that same order, then cyclic edges in insertion order.
    """
    def label(v) -> str:
        return _dot_id(str(names[v] if names is not None else v))

    out = ["digraph g {\n"]
    order = g.vertices()
    for v in order:
        out.append(f"  {label(v)};\n")
    for u in order:
        for w in g.store.successors(u):
            out.append(f"  {label(u)} -> {label(w)};\n")
    for u, w in g.cyclic_edges():
        out.append(f"  {label(u)} -> {label(w)} [style=dashed];\n")
    out.append("}\n")
    return "".join(out)


@dataclass
class BenchResult:
    counts: dict = field(default_factory=dict)
    incremental_ops: int = 0
    batch_ops: int = 0
    incremental_seconds: float = 0.0
    batch_seconds: float = 0.0
    reorders: int = 0
    promotions: int = 0
    batch_complete: bool = True
    disagreements: list = field(default_factory=list)
    final_ok: bool = True
    graph: DynamicGraph | None = None

    @property
    def ratio(self) -> float:
        if self.incremental_seconds == 0:
            return float("inf")
        return self.batch_seconds / self.incremental_seconds

    def format(self) -> str:
        lines = [f"ops {sum(self.counts.values())}"]
        lines += [f"ops_{kind} {self.counts.get(kind, 0)}" for kind in MUTATIONS]
        lines += [
            f"incremental_ops {self.incremental_ops}",
            f"batch_ops {self.batch_ops}",
            f"incremental_seconds {self.incremental_seconds:.6f}",
            f"batch_seconds {self.batch_seconds:.6f}",
            f"ratio {self.ratio:.3f}",
            f"batch_complete {'yes' if self.batch_complete else 'no'}",
            f"incremental_reorders {self.reorders}",
            f"incremental_promotions {self.promotions}",
            f"agreement {'ok' if not self.disagreements else 'FAIL ' + ' '.join(map(str, self.disagreements[:10]))}",
            f"final {'ok' if self.final_ok else 'FAIL'}",
        ]
        return "".join(line + "\n" for line in lines)


def run_bench(ops: list[TraceOp], *, early_stop: bool = False) -> BenchResult:
    """Replay a mutation-only trace incrementally, then with a batch sort after every mutation.

    With ``early_stop`` the batch replay is abandoned as soon as its elapsed
    time exceeds the whole incremental replay; ``batch_seconds`` is then a
    lower bound on the full batch cost and ``batch_complete`` is False.
    """
    for op in ops:
        if op.kind not in MUTATIONS:
            raise SemanticError(op.line, f"bench traces may only contain mutations, got {op.kind!r}")
    res = BenchResult()
    for op in ops:
        res.counts[op.kind] = res.counts.get(op.kind, 0) + 1

    replayer = Replayer()
    g = replayer.graph
    flags = []
    execute = replayer.execute
    t0 = time.perf_counter()
    for op in ops:
        execute(op)
        flags.append(g.store.cyclic_count() > 0)
    res.incremental_seconds = time.perf_counter() - t0
    res.incremental_ops = len(ops)
    res.reorders = g.reorder_count
    res.promotions = replayer.promotions
    res.graph = g

    # Batch side works on raw names; the trace already validated above.
    vertices: dict[str, None] = {}
    edges: dict[tuple, None] = {}
    last = None
    elapsed = 0.0
    for i, op in enumerate(ops):
        t0 = time.perf_counter()
        if op.kind == "node":
            vertices[op.args[0]] = None
        elif op.kind == "delnode":
            name = op.args[0]
            del vertices[name]
            edges = {e: None for e in edges if name not in e}
        elif op.kind == "edge":
            edges[op.args] = None
        else:
            del edges[op.args]
        last = batch_toposort(vertices, edges, closure=False)
        elapsed += time.perf_counter() - t0
        res.batch_ops += 1
        if last.cyclic != flags[i]:
            res.disagreements.append(op.line)
        if early_stop and elapsed > res.incremental_seconds and i + 1 < len(ops):
            res.batch_complete = False
            break
    res.batch_seconds = elapsed

    names = replayer.names
    if res.batch_complete:
        ok = last is None or last.cyclic == g.has_cycles()
        if ok and not g.has_cycles():
            ordering = [names[v] for v in g.topological_ordering()]
            ok = is_valid_ordering(ordering, vertices, edges) and is_valid_ordering(last.ordering or [], vertices, edges)
        res.final_ok = ok
    else:
        if not g.has_cycles():
            res.final_ok = is_valid_ordering(g.topological_ordering(), g.vertices(), g.edges())
    return res


def bench_compare(ops, *, early_stop: bool = False) -> str:
    if isinstance(ops, str):
        ops = parse_trace(ops)
    return run_bench(list(ops), early_stop=early_stop).format()
