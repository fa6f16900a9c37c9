import itertools
import random

import pytest

from dyntopo import ACYCLIC, CYCLIC, AdjacencyStore, DuplicateEdge, Edge, UnknownEdge, UnknownVertex


@pytest.fixture
def store():
    s = AdjacencyStore()
    for v in "abcdxypq":
        s.add_vertex(v)
    return s


def test_insert_acyclic(store):
    store.insert_edge_record(Edge("a", "b"), ACYCLIC)
    assert store.out_neighbors_acyclic("a") == ["b"]
    assert store.in_neighbors_acyclic("b") == ["a"]
    assert store.cyclic_edges() == []


def test_insert_cyclic(store):
    store.insert_edge_record(Edge("b", "a"), CYCLIC)
    assert store.cyclic_edges() == [("b", "a")]
    assert store.out_neighbors_acyclic("b") == []
    assert store.in_neighbors_acyclic("a") == []


def test_insert_duplicate(store):
    store.insert_edge_record(Edge("a", "b"), ACYCLIC)
    with pytest.raises(DuplicateEdge):
        store.insert_edge_record(Edge("a", "b"), ACYCLIC)
    with pytest.raises(DuplicateEdge):
        store.insert_edge_record(Edge("a", "b"), CYCLIC)


def test_insert_with_dead_endpoint(store):
    with pytest.raises(UnknownVertex):
        store.insert_edge_record(Edge("a", "zz"), ACYCLIC)


def test_delete_returns_class(store):
    store.insert_edge_record(Edge("a", "b"), ACYCLIC)
    store.insert_edge_record(Edge("b", "a"), CYCLIC)
    assert store.delete_edge_record(Edge("a", "b")) is ACYCLIC
    assert store.out_neighbors_acyclic("a") == []
    assert store.in_neighbors_acyclic("b") == []
    assert store.delete_edge_record(Edge("b", "a")) is CYCLIC
    assert store.cyclic_edges() == []
    with pytest.raises(UnknownEdge):
        store.delete_edge_record(Edge("a", "c"))


def test_edge_class_lookup(store):
    store.insert_edge_record(Edge("a", "b"), ACYCLIC)
    store.insert_edge_record(Edge("b", "a"), CYCLIC)
    assert store.edge_class(("a", "b")) is ACYCLIC
    assert store.edge_class(("b", "a")) is CYCLIC
    assert store.edge_class(("a", "c")) is None


def test_iteration_in_insertion_order(store):
    store.insert_edge_record(Edge("a", "c"), ACYCLIC)
    store.insert_edge_record(Edge("a", "b"), ACYCLIC)
    store.insert_edge_record(Edge("x", "y"), CYCLIC)
    store.insert_edge_record(Edge("p", "q"), CYCLIC)
    assert store.out_neighbors_acyclic("a") == ["c", "b"]
    assert store.cyclic_edges() == [("x", "y"), ("p", "q")]
    assert store.out_neighbors_acyclic("d") == []
    with pytest.raises(UnknownVertex):
        store.out_neighbors_acyclic("nope")


def _check_store(store, expected):
    acyclic = {e for e, c in expected.items() if c is ACYCLIC}
    cyclic = {e for e, c in expected.items() if c is CYCLIC}
    for u in store.vertices():
        for w in store.out_neighbors_acyclic(u):
            assert u in store.in_neighbors_acyclic(w)
        for w in store.in_neighbors_acyclic(u):
            assert u in store.out_neighbors_acyclic(w)
    got_acyclic = set(store.acyclic_edges())
    got_cyclic = set(store.cyclic_edges())
    assert got_acyclic.isdisjoint(got_cyclic)
    assert got_acyclic == acyclic
    assert got_cyclic == cyclic


@pytest.mark.parametrize("seed", range(40))
def test_mirror_and_partition_under_random_churn(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    store = AdjacencyStore()
    for v in range(n):
        store.add_vertex(v)
    expected = {}
    pairs = list(itertools.product(range(n), repeat=2))
    for _ in range(60):
        e = rng.choice(pairs)
        if e in expected:
            assert store.delete_edge_record(e) is expected.pop(e)
        else:
            c = rng.choice([ACYCLIC, CYCLIC])
            store.insert_edge_record(Edge(*e), c)
            expected[e] = c
        _check_store(store, expected)


def test_determinism():
    def make():
        s = AdjacencyStore()
        for v in range(6):
            s.add_vertex(v)
        rng = random.Random(7)
        for _ in range(20):
            e = Edge(rng.randrange(6), rng.randrange(6))
            if s.edge_class(e) is None:
                s.insert_edge_record(e, rng.choice([ACYCLIC, CYCLIC]))
        return s

    a, b = make(), make()
    assert list(a.edges()) == list(b.edges())
    assert [a.out_neighbors_acyclic(v) for v in range(6)] == [b.out_neighbors_acyclic(v) for v in range(6)]


def test_copy_is_independent(store):
    store.insert_edge_record(Edge("a", "b"), ACYCLIC)
    clone = store.copy()
    clone.delete_edge_record(Edge("a", "b"))
    assert store.edge_class(("a", "b")) is ACYCLIC
