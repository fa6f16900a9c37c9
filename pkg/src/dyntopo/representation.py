"""The stored vertex ordering: a bijection between vertices and slots 0..n-1."""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import DuplicateVertex, IndexOutOfRange, OverlappingPools, UnknownVertex, UnsortedPool


class Representation:
    """Vertex <-> index bijection with contiguous indices.

    ``vertex_at`` is a plain list and ``index_of`` a dict kept as its
    inverse.  Vertices are opaque hashable handles (ints in practice).
    """

    __slots__ = ("_order", "_index")

    def __init__(self):
        self._order: list[int] = []
        self._index: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._order)

    def __contains__(self, v) -> bool:
        return v in self._index

    def __iter__(self) -> Iterator[int]:
        return iter(self._order)

    def __repr__(self) -> str:
        return f"Representation({self._order!r})"

    def copy(self) -> Representation:
        other = Representation()
        other._order = list(self._order)
        other._index = dict(self._index)
        return other

    def order(self) -> list[int]:
        return list(self._order)

    def append_vertex(self, v) -> int:
        if v in self._index:
            raise DuplicateVertex(v)
        i = len(self._order)
        self._order.append(v)
        self._index[v] = i
        return i

    def remove_vertex_slot(self, v) -> int:
        try:
            i = self._index.pop(v)
        except KeyError:
            raise UnknownVertex(v) from None
        order = self._order
        del order[i]
        index = self._index
        for j in range(i, len(order)):
            index[order[j]] = j
        return i

    def index_of(self, v) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def vertex_at(self, i: int):
        if not 0 <= i < len(self._order):
            raise IndexOutOfRange(i)
        return self._order[i]

    def reassign_pool(self, first: Sequence, second: Sequence) -> None:
        """Move ``first`` to the low end of the combined slot pool, ``second`` to the high end.

        Both sequences must already be ascending by current index.  Only the
        slots they occupy are touched; every other vertex stays put.
        """
        index = self._index
        try:
            first_slots = [index[v] for v in first]
            second_slots = [index[v] for v in second]
        except KeyError as exc:
            raise UnknownVertex(exc.args[0]) from None
        for slots, name in ((first_slots, "first"), (second_slots, "second")):
            for a, b in zip(slots, slots[1:]):
                if a >= b:
                    raise UnsortedPool(f"{name} pool is not ascending by index")
        if not set(first).isdisjoint(second):
            raise OverlappingPools(sorted(set(first) & set(second)))

        pool = sorted(first_slots + second_slots)
        order = self._order
        for v, slot in zip(first, pool):
            index[v] = slot
            order[slot] = v
        k = len(first_slots)
        for v, slot in zip(second, pool[k:]):
            index[v] = slot
            order[slot] = v
