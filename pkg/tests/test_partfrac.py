from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diffprod import (
    NegativeExponent,
    NodeSetTooSmall,
    decompose,
    diff_products,
    euler_sum,
    euler_sum_via_decomposition,
    homogeneous_brute_force,
    nodeset_new,
    reconstruct,
)
from .strategies import multi_node_sets, node_sets

SIX = nodeset_new([3, 8, 12, 15, 17, 18])
FOUR = nodeset_new([2, 5, 7, 8])


class TestDecompose:
    def test_improper_two_poles(self):
        # x^2 = (x-1)(x-2) - (x-2) + 4(x-1)
        pfd = decompose(2, nodeset_new([1, 2]))
        assert pfd.polynomial_part == [F(1)]
        assert pfd.residues == [-1, 4]

    def test_proper_four_poles(self):
        pfd = decompose(0, FOUR)
        assert pfd.polynomial_part == []
        assert pfd.residues == [F(-1, 90), F(1, 18), F(-1, 10), F(1, 18)]

    def test_pole_at_zero(self):
        pfd = decompose(1, nodeset_new([0, 1]))
        assert pfd.polynomial_part == []
        assert pfd.residues == [0, 1]

    def test_zero_power_zero_pole_convention(self):
        # 0**0 = 1 so the pole at zero still gets a nonzero residue
        pfd = decompose(0, nodeset_new([0, 1]))
        assert pfd.residues == [-1, 1]

    def test_part_is_unity_at_n_equals_m(self):
        assert decompose(6, SIX).polynomial_part == [F(1)]

    def test_part_one_past_m(self):
        # x + sum of the nodes
        assert decompose(7, SIX).polynomial_part == [F(73), F(1)]

    def test_negative_exponent(self):
        with pytest.raises(NegativeExponent):
            decompose(-1, FOUR)

    @given(node_sets, st.integers(min_value=0, max_value=13))
    def test_residues_match_diff_products(self, ns, n):
        pfd = decompose(n, ns)
        products = diff_products(ns)
        assert pfd.residues == [
            a**n / A for a, A in zip(ns.values, products)
        ]

    @given(node_sets, st.integers(min_value=0, max_value=13))
    def test_integral_part_ladder(self, ns, n):
        pfd = decompose(n, ns)
        if n < ns.m:
            assert pfd.polynomial_part == []
        else:
            k = n - ns.m
            expected = [homogeneous_brute_force(ns, k - d) for d in range(k + 1)]
            assert pfd.polynomial_part == expected


class TestReconstruct:
    def test_two_pole_example(self):
        assert reconstruct(decompose(2, nodeset_new([1, 2])))

    def test_four_pole_example(self):
        assert reconstruct(decompose(0, FOUR))

    def test_six_pole_example(self):
        assert reconstruct(decompose(5, SIX))

    @settings(deadline=None)
    @given(node_sets, st.integers(min_value=0, max_value=13))
    def test_always_reconstructs(self, ns, n):
        assert reconstruct(decompose(n, ns))


class TestEulerSumViaDecomposition:
    def test_first_example(self):
        assert euler_sum_via_decomposition(FOUR, 0) == 0

    def test_six_nodes_power_five(self):
        assert euler_sum_via_decomposition(SIX, 5) == 1

    def test_two_nodes(self):
        assert euler_sum_via_decomposition(nodeset_new([0, 1]), 0) == 0

    def test_rejects_singletons(self):
        with pytest.raises(NodeSetTooSmall):
            euler_sum_via_decomposition(nodeset_new([5]), 0)

    def test_negative_exponent(self):
        with pytest.raises(NegativeExponent):
            euler_sum_via_decomposition(FOUR, -3)

    @given(multi_node_sets, st.integers(min_value=0, max_value=13))
    def test_agrees_with_direct_sum(self, ns, n):
        assert euler_sum_via_decomposition(ns, n) == euler_sum(ns, n)
