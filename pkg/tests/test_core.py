"""Instance, tour and 1-path decomposition behaviour."""

from __future__ import annotations

import pytest
from hypothesis import given

from kopt12 import (
    DuplicateVertexError,
    Instance,
    InvalidArgumentError,
    MissingVertexError,
    Tour,
    WrongLengthError,
    canonical_edge,
    cost_edge,
    identity_tour,
    one_path_decomposition,
    tour_cost,
    validate_tour,
)

from conftest import instance_tour_pairs, instances


def test_canonical_edge_orders_endpoints():
    assert canonical_edge(2, 1) == (1, 2)
    assert canonical_edge(1, 2) == (1, 2)
    assert canonical_edge(0, 7) == (0, 7)


class TestInstanceValidation:
    def test_rejects_tiny_vertex_count(self):
        with pytest.raises(InvalidArgumentError):
            Instance(2, frozenset())

    def test_rejects_non_canonical_pair(self):
        with pytest.raises(InvalidArgumentError):
            Instance(5, frozenset({(2, 1)}))

    def test_rejects_out_of_range_pair(self):
        with pytest.raises(InvalidArgumentError):
            Instance(5, frozenset({(0, 9)}))

    def test_from_pairs_rejects_self_loop(self):
        with pytest.raises(InvalidArgumentError):
            Instance.from_pairs(5, [(3, 3)])

    def test_from_pairs_rejects_duplicates(self):
        with pytest.raises(InvalidArgumentError):
            Instance.from_pairs(5, [(1, 2), (2, 1)])

    def test_from_pairs_canonicalises(self):
        inst = Instance.from_pairs(5, [(3, 1), (0, 4)])
        assert inst.cost1 == frozenset({(1, 3), (0, 4)})


def test_cost_edge_values(hexa):
    assert cost_edge(hexa, 1, 2) == 1
    assert cost_edge(hexa, 2, 1) == 1
    assert cost_edge(hexa, 0, 1) == 2
    with pytest.raises(InvalidArgumentError):
        cost_edge(hexa, 0, 0)
    with pytest.raises(InvalidArgumentError):
        cost_edge(hexa, 0, 6)


@given(instances())
def test_cost_matrix_matches_cost_edge(instance):
    m = instance.cost_matrix
    n = instance.n
    assert m.shape == (n, n)
    for u in range(n):
        assert m[u, u] == 0
        for v in range(u + 1, n):
            assert m[u, v] == m[v, u] == cost_edge(instance, u, v)


def test_cost1_neighbors(hexa):
    assert hexa.cost1_neighbors[2] == (0, 1, 3)
    assert hexa.cost1_neighbors[0] == (2,)


class TestTourValidation:
    def test_wrong_length(self, hexa):
        with pytest.raises(WrongLengthError):
            validate_tour(hexa, Tour((0, 1, 2)))

    def test_duplicate_vertex(self, hexa):
        with pytest.raises(DuplicateVertexError):
            validate_tour(hexa, Tour((0, 1, 2, 3, 4, 4)))

    def test_missing_vertex(self, hexa):
        with pytest.raises(MissingVertexError):
            validate_tour(hexa, Tour((0, 1, 2, 3, 4, 9)))

    def test_accepts_permutation(self, hexa):
        validate_tour(hexa, Tour((5, 3, 1, 0, 2, 4)))


def test_tour_edges_are_canonical():
    t = Tour((2, 0, 3, 1))
    assert list(t.edges()) == [(0, 2), (0, 3), (1, 3), (1, 2)]
    assert t.edge_set == frozenset({(0, 2), (0, 3), (1, 3), (1, 2)})
    assert t.position == {2: 0, 0: 1, 3: 2, 1: 3}
    assert t.n == 4


def test_identity_tour():
    assert identity_tour(5).order == (0, 1, 2, 3, 4)


def test_tour_cost_hexa(hexa, hexa_tour):
    assert tour_cost(hexa, hexa_tour) == 8


@given(instance_tour_pairs())
def test_tour_cost_equals_edge_sum(pair):
    instance, tour = pair
    expected = sum(cost_edge(instance, u, v) for u, v in tour.edges())
    assert tour_cost(instance, tour) == expected
    heavy = sum(1 for u, v in tour.edges() if cost_edge(instance, u, v) == 2)
    assert tour_cost(instance, tour) == instance.n + heavy


def test_decomposition_hexa(hexa, hexa_tour):
    dec = one_path_decomposition(hexa, hexa_tour)
    assert dec.paths == ((0,), (1, 2, 3, 4, 5))
    assert not dec.whole_cycle
    assert dec.zero_path_count == 1
    assert dec.edge_counts() == (0, 4)
    assert dec.endpoints() == ((0, 0), (1, 5))


def test_decomposition_whole_cycle():
    ring = Instance.from_pairs(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    dec = one_path_decomposition(ring, identity_tour(6))
    assert dec.whole_cycle
    assert dec.paths == ()
    assert dec.zero_path_count == 0


def test_decomposition_all_isolated():
    inst = Instance(5, frozenset())
    dec = one_path_decomposition(inst, identity_tour(5))
    assert dec.paths == ((0,), (1,), (2,), (3,), (4,))
    assert dec.zero_path_count == 5


@given(instance_tour_pairs())
def test_decomposition_invariants(pair):
    instance, tour = pair
    dec = one_path_decomposition(instance, tour)
    heavy = sum(1 for u, v in tour.edges() if cost_edge(instance, u, v) == 2)
    if dec.whole_cycle:
        assert heavy == 0
        assert dec.paths == ()
        return
    assert len(dec.paths) == heavy
    seen = [v for path in dec.paths for v in path]
    assert sorted(seen) == list(range(instance.n))
    assert list(dec.paths) == sorted(dec.paths)
    for path in dec.paths:
        assert path <= tuple(reversed(path))
        for a, b in zip(path, path[1:]):
            assert cost_edge(instance, a, b) == 1
            assert canonical_edge(a, b) in tour.edge_set
    boundary = {
        canonical_edge(u, v)
        for u, v in tour.edges()
        if cost_edge(instance, u, v) == 2
    }
    for path in dec.paths:
        for end in (path[0], path[-1]):
            incident = [e for e in boundary if end in e]
            assert incident
