"""Lower-bound families, regularity checking, and random instances."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kopt12 import (
    Instance,
    InvalidArgumentError,
    canonical_edge,
    certify_k_optimal,
    certify_kpp_optimal,
    cost_edge,
    gen_three_opt_lb,
    gen_three_opt_pp_lb,
    gen_two_opt_lb,
    identity_tour,
    is_regular,
    one_path_decomposition,
    random_instance,
    tour_cost,
    validate_tour,
)


class TestTwoOptFamily:
    def test_minimum_size(self):
        with pytest.raises(InvalidArgumentError):
            gen_two_opt_lb(6)

    def test_frozen_member_n7(self):
        fam = gen_two_opt_lb(7)
        assert fam.instance.cost1 == frozenset(
            {(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6), (0, 2), (2, 4), (4, 6)}
        )
        assert fam.tour.order == (0, 1, 3, 5, 6, 4, 2)
        assert fam.claimed_tour_cost == 9
        assert fam.reference_tour == identity_tour(7)
        assert fam.claimed_reference_bound == 7
        assert tour_cost(fam.instance, fam.reference_tour) == 7

    @pytest.mark.parametrize("n", range(7, 13))
    def test_designated_tour_is_2_optimal(self, n):
        fam = gen_two_opt_lb(n)
        assert tour_cost(fam.instance, fam.tour) == n + (n - 2) // 2
        assert certify_k_optimal(fam.instance, fam.tour, 2).verdict == "optimal"


class TestThreeOptFamily:
    def test_minimum_size(self):
        with pytest.raises(InvalidArgumentError):
            gen_three_opt_lb(2)

    @pytest.mark.parametrize("s", [3, 4, 5])
    def test_costs_and_structure(self, s):
        fam = gen_three_opt_lb(s)
        n = 8 * s
        assert fam.instance.n == n
        assert len(fam.instance.cost1) == 13 * s
        assert fam.claimed_tour_cost == 11 * s
        assert tour_cost(fam.instance, fam.tour) == 11 * s
        validate_tour(fam.instance, fam.reference_tour)
        assert tour_cost(fam.instance, fam.reference_tour) <= 8 * s + 4
        dec = one_path_decomposition(fam.instance, fam.tour)
        assert dec.zero_path_count == 2 * s
        assert len(dec.paths) == 3 * s

    @pytest.mark.parametrize("s", [3, 4])
    def test_designated_tour_is_3_optimal(self, s):
        fam = gen_three_opt_lb(s)
        assert certify_k_optimal(fam.instance, fam.tour, 3).verdict == "optimal"


class TestMergingFamily:
    def test_minimum_size(self):
        with pytest.raises(InvalidArgumentError):
            gen_three_opt_pp_lb(1)

    @pytest.mark.parametrize("s", [2, 3, 4])
    def test_costs_and_structure(self, s):
        fam = gen_three_opt_pp_lb(s)
        n = 6 * s
        assert fam.instance.n == n
        assert fam.claimed_tour_cost == 8 * s
        assert tour_cost(fam.instance, fam.tour) == 8 * s
        validate_tour(fam.instance, fam.reference_tour)
        assert tour_cost(fam.instance, fam.reference_tour) == 6 * s
        for u, v in fam.reference_tour.edges():
            assert cost_edge(fam.instance, u, v) == 1

    def test_path_profile_at_s2(self):
        fam = gen_three_opt_pp_lb(2)
        dec = one_path_decomposition(fam.instance, fam.tour)
        assert dec.edge_counts() == (1, 3, 1, 3)
        assert dec.zero_path_count == 0

    @pytest.mark.parametrize("s", [2, 3])
    def test_designated_tour_survives_merging_predicate(self, s):
        fam = gen_three_opt_pp_lb(s)
        assert certify_kpp_optimal(fam.instance, fam.tour, 3).verdict == "optimal"


class TestRegularity:
    def test_merging_family_is_regular_in_blocks_of_6(self):
        result = is_regular("three-opt-pp-lb", 16, 6)
        assert result.regular
        assert result.condition is None
        assert result.violation is None

    def test_three_opt_family_not_regular_in_blocks_of_8(self):
        result = is_regular("three-opt-lb", 12, 8)
        assert not result.regular
        assert result.condition == 3
        assert result.violation == (1, 87)

    def test_three_opt_family_regular_in_blocks_of_16(self):
        result = is_regular("three-opt-lb", 6, 16)
        assert result.regular

    def test_argument_errors(self):
        with pytest.raises(InvalidArgumentError):
            is_regular("no-such-family", 8, 8)
        with pytest.raises(InvalidArgumentError):
            is_regular("three-opt-lb", 7, 6)
        with pytest.raises(InvalidArgumentError):
            is_regular("three-opt-lb", 2, 8)
        with pytest.raises(InvalidArgumentError):
            is_regular("three-opt-lb", 8, 0)
        with pytest.raises(InvalidArgumentError):
            is_regular("three-opt-lb", 4, 4)


class TestRandomInstance:
    def test_deterministic_for_fixed_seed(self):
        assert random_instance(9, 0.5, 123) == random_instance(9, 0.5, 123)
        assert random_instance(9, 0.5, 123) != random_instance(9, 0.5, 124)

    def test_probability_extremes(self):
        assert random_instance(6, 0.0, 1).cost1 == frozenset()
        full = random_instance(6, 1.0, 1).cost1
        assert len(full) == 15

    def test_argument_errors(self):
        with pytest.raises(InvalidArgumentError):
            random_instance(2, 0.5, 0)
        with pytest.raises(InvalidArgumentError):
            random_instance(6, 1.5, 0)

    @given(
        st.integers(min_value=3, max_value=12),
        st.sampled_from([0.2, 0.5, 0.8]),
        st.integers(min_value=0, max_value=10**6),
    )
    def test_edges_are_canonical_pairs(self, n, p, seed):
        instance = random_instance(n, p, seed)
        assert isinstance(instance, Instance)
        for u, v in instance.cost1:
            assert 0 <= u < v < n
            assert canonical_edge(u, v) == (u, v)
