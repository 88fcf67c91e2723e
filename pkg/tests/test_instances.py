"""Instance families and generators."""
from __future__ import annotations

import pytest

from tangles import (
    Permutation,
    SwapList,
    ThreePartitionInstance,
    hardness_gadget,
    is_consistent,
    is_feasible,
    loop_list,
    pseudoline_list,
    random_list,
    solve_general,
)

# Frozen expectations for the loop family: the first n-2 wires cross each
# other once and loop twice around the right twist pair, whose own
# multiplicity is n-1.  The tail columns alternate by wire parity; the
# alternation direction is the same for odd and even n.
LOOP_7 = [
    [0, 1, 1, 1, 1, 0, 2],
    [1, 0, 1, 1, 1, 2, 0],
    [1, 1, 0, 1, 1, 0, 2],
    [1, 1, 1, 0, 1, 2, 0],
    [1, 1, 1, 1, 0, 0, 2],
    [0, 2, 0, 2, 0, 0, 6],
    [2, 0, 2, 0, 2, 6, 0],
]

LOOP_6 = [
    [0, 1, 1, 1, 0, 2],
    [1, 0, 1, 1, 2, 0],
    [1, 1, 0, 1, 0, 2],
    [1, 1, 1, 0, 2, 0],
    [0, 2, 0, 2, 0, 5],
    [2, 0, 2, 0, 5, 0],
]


class TestLoopFamily:
    def test_matrices(self):
        assert loop_list(7).matrix() == LOOP_7
        assert loop_list(6).matrix() == LOOP_6

    def test_lengths(self):
        assert loop_list(7).length == 26
        assert loop_list(4).length == 1 + 4 + 3

    def test_minimum_height(self):
        assert solve_general(loop_list(5)).height == 11

    def test_restriction_to_the_twist_corner(self):
        corner = loop_list(7).restrict({1, 6, 7})
        assert corner.multiplicity(1, 2) == 0
        assert corner.multiplicity(1, 3) == 2
        assert corner.multiplicity(2, 3) == 6

    def test_rejects_small_orders(self):
        with pytest.raises(ValueError):
            loop_list(3)


class TestPseudolineFamily:
    def test_examples(self):
        assert pseudoline_list(2) == SwapList.from_mult(2, {(1, 2): 1})
        assert pseudoline_list(1) == SwapList.zero(1)
        assert solve_general(pseudoline_list(3)).height == 4

    def test_feasible_within_the_sorting_bound(self):
        for n in range(2, 8):
            report = solve_general(pseudoline_list(n))
            assert report.verdict == "feasible"
            assert report.height <= n + 1


class TestThreePartition:
    def test_target(self):
        inst = ThreePartitionInstance((2, 2, 4))
        assert inst.m == 1 and inst.target == 8

    def test_validation(self):
        with pytest.raises(ValueError):
            ThreePartitionInstance((1, 2))
        with pytest.raises(ValueError):
            ThreePartitionInstance((1, 1, 1, 1, 1, 2))  # sum 7 not divisible by 2
        with pytest.raises(ValueError):
            ThreePartitionInstance((0, 4, 4))
        with pytest.raises(ValueError):
            ThreePartitionInstance((2, 2, 4), strict_range=True)
        ThreePartitionInstance((3, 3, 3, 3, 3, 3), strict_range=False)


class TestHardnessGadget:
    def test_small_instance_structure(self):
        gadget = hardness_gadget(ThreePartitionInstance((2, 2, 4)))
        swaps, roles = gadget.swaps, gadget.roles
        assert swaps.n == 14 == 12 * 1 + 2
        assert gadget.height_bound == 2 * 8 + 7
        omega, omega_p = roles["omega"], roles["omega_prime"]
        assert (omega, omega_p) == (7, 8)
        assert swaps.multiplicity(omega, omega_p) == 2
        for i, value in enumerate((2, 2, 4), start=1):
            a, ap = roles[f"alpha_{i}"], roles[f"alpha_prime_{i}"]
            assert swaps.multiplicity(a, ap) == 2 * value
            assert swaps.multiplicity(a, omega_p) == 2
            assert swaps.multiplicity(ap, omega) == 2
            assert swaps.multiplicity(a, omega) == 0
            assert swaps.multiplicity(ap, omega_p) == 0
        # inner wire order: gamma, delta/beta, alphas descending, omegas
        assert roles["gamma_1"] == 1
        assert roles["delta_1"] == 2 and roles["beta_1"] == 3
        assert roles["alpha_3"] == 4 and roles["alpha_1"] == 6
        assert roles["gamma_prime_1"] == 14
        assert swaps.multiplicity(roles["gamma_1"], roles["beta_1"]) == 2 * 8
        assert swaps.multiplicity(roles["gamma_prime_1"], roles["beta_prime_1"]) == 2 * 8

    def test_two_group_weights(self):
        values = (4, 4, 4, 4, 4, 4)
        gadget = hardness_gadget(ThreePartitionInstance(values))
        swaps, roles = gadget.swaps, gadget.roles
        m, b = 2, 12
        assert swaps.n == 26
        assert gadget.height_bound == 2 * m**4 * b + 7 * m**2
        assert swaps.multiplicity(roles["omega"], roles["omega_prime"]) == 2 * m
        weight = 2 * m**3
        assert swaps.multiplicity(roles["alpha_2"], roles["alpha_prime_2"]) == weight * 4
        assert swaps.multiplicity(roles["gamma_1"], roles["beta_1"]) == m * weight * b
        assert swaps.multiplicity(roles["gamma_2"], roles["beta_2"]) == weight * b
        assert swaps.multiplicity(roles["gamma_prime_1"], roles["beta_prime_1"]) == weight * b
        assert swaps.multiplicity(roles["gamma_2"], roles["beta_1"]) == 1
        assert swaps.multiplicity(roles["gamma_2"], roles["delta_1"]) == 1
        assert swaps.multiplicity(roles["gamma_1"], roles["beta_2"]) == 0
        assert swaps.multiplicity(roles["gamma_prime_1"], roles["beta_prime_2"]) == 1
        assert swaps.multiplicity(roles["gamma_prime_2"], roles["beta_prime_1"]) == 0

    def test_gadgets_are_consistent_and_non_separable(self):
        for values in ((2, 2, 4), (1, 1, 1), (3, 3, 3, 3, 3, 3), (1, 2, 3, 2, 2, 2)):
            gadget = hardness_gadget(ThreePartitionInstance(values))
            swaps = gadget.swaps
            assert is_consistent(Permutation.identity(swaps.n), swaps)
            assert swaps.is_non_separable()


class TestRandomLists:
    def test_single_pair_is_forced(self):
        assert random_list(2, 3, 0) == SwapList.from_mult(2, {(1, 2): 3})

    def test_deterministic_and_sized(self):
        a = random_list(5, 8, 1234)
        b = random_list(5, 8, 1234)
        assert a == b
        assert a.length == 8
        assert is_feasible(a)

    def test_rejection_filters_unrealizable_draws(self):
        for seed in range(40):
            lst = random_list(3, 2, seed)
            assert lst.length == 2
            assert is_feasible(lst)
            assert lst != SwapList.from_mult(3, {(1, 3): 2})

    def test_retry_cap_is_reported(self):
        from tangles import RandomRejectionError

        hit = False
        for seed in range(200):
            try:
                random_list(3, 2, seed, max_rejections=0)
            except RandomRejectionError:
                hit = True
                break
        assert hit
