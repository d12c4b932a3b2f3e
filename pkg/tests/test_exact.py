"""Exact solvers: dynamic program against brute force."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from kopt12 import (
    Instance,
    SizeExceededError,
    Tour,
    brute_force,
    held_karp,
    identity_tour,
    tour_cost,
    validate_tour,
)

from conftest import instances


def test_hexa_optimum(hexa, hexa_optimal):
    for result in (held_karp(hexa), brute_force(hexa)):
        assert result.cost == 7
        assert result.tour == hexa_optimal
        assert tour_cost(hexa, result.tour) == 7
    assert held_karp(hexa).method == "held-karp"
    assert brute_force(hexa).method == "brute-force"


def test_cost_extremes():
    empty = Instance(7, frozenset())
    assert held_karp(empty).cost == 14
    assert held_karp(empty).tour == identity_tour(7)
    complete = Instance.from_pairs(
        5, [(u, v) for u in range(5) for v in range(u + 1, 5)]
    )
    assert held_karp(complete).cost == 5


def test_size_limits():
    big = Instance(17, frozenset())
    with pytest.raises(SizeExceededError):
        held_karp(big)
    with pytest.raises(SizeExceededError):
        held_karp(Instance(12, frozenset()), limit=10)
    with pytest.raises(SizeExceededError):
        brute_force(Instance(11, frozenset()))


def test_limit_override_allows_larger_instances():
    inst = Instance.from_pairs(14, [(i, i + 1) for i in range(13)] + [(0, 13)])
    assert held_karp(inst, limit=14).cost == 14


@settings(max_examples=60, deadline=None)
@given(instances(min_n=5, max_n=9))
def test_methods_agree_and_return_valid_tours(instance):
    a = held_karp(instance)
    b = brute_force(instance)
    assert a.cost == b.cost
    for result in (a, b):
        validate_tour(instance, result.tour)
        assert tour_cost(instance, result.tour) == result.cost
        assert result.tour.order[0] == 0


def test_optimum_is_a_lower_bound_for_all_tours(hexa):
    import itertools

    best = held_karp(hexa).cost
    costs = [
        tour_cost(hexa, Tour((0,) + perm))
        for perm in itertools.permutations(range(1, 6))
    ]
    assert min(costs) == best
