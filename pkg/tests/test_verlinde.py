"""Engine tests: certified sums, dispatch, transfer, closed forms."""

import math
from fractions import Fraction

import pytest

from thetadim.verlinde import (
    METHOD_ELLIPTIC,
    METHOD_RANK_ONE,
    METHOD_TRANSFER,
    METHOD_TRIG,
    DimResult,
    UnsupportedQuery,
    VerlindeQuery,
    beauville_sum,
    elliptic_h0,
    gl_dim,
    jacobian_theta_dim,
    sl_dim,
    symmetric_power_dim,
    verlinde_sum_terms,
)
from trig_oracle import FROZEN_SUMS, brute_force_sum


class TestVerlindeQuery:
    @pytest.mark.parametrize("g,n,k", [(0, 2, 1), (1, 0, 1), (1, 2, 0), (-3, 1, 1)])
    def test_rejects_bad_parameters(self, g, n, k):
        with pytest.raises(ValueError):
            VerlindeQuery(g, n, 0, k)

    def test_gcd_accessors(self):
        q = VerlindeQuery(2, 4, -6, 1)
        assert (q.h, q.n_bar, q.d_bar) == (2, 2, -3)

    def test_gcd_of_zero_degree_is_rank(self):
        q = VerlindeQuery(2, 5, 0, 1)
        assert (q.h, q.n_bar, q.d_bar) == (5, 1, 0)


class TestSumTerms:
    def test_subset_count_and_scale(self):
        terms, scale = verlinde_sum_terms(2, 2, 3)
        assert len(terms) == math.comb(5, 2)
        assert scale == Fraction(4, 25)
        # every term has rank*level factors at genus 2
        assert all(len(t.factors) == 6 for _, t in terms)

    def test_genus_one_terms_are_empty_products(self):
        terms, _ = verlinde_sum_terms(1, 3, 2)
        assert all(t.factors == () for _, t in terms)


class TestBeauvilleSum:
    def test_frozen_examples(self):
        assert beauville_sum(1, 2, 2).value == 3
        assert beauville_sum(2, 2, 1).value == 4
        assert beauville_sum(2, 2, 3).value == 20
        assert beauville_sum(2, 3, 2).value == 45

    def test_result_is_certified_trig(self):
        result = beauville_sum(2, 2, 1)
        assert result == DimResult(4, METHOD_TRIG, True)

    @pytest.mark.parametrize("g", range(1, 6))
    @pytest.mark.parametrize("k", range(1, 11))
    def test_rank_one_row_is_one(self, g, k):
        assert beauville_sum(g, 1, k).value == 1

    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("k", range(1, 9))
    def test_genus_one_collapse_to_binomial(self, n, k):
        assert beauville_sum(1, n, k).value == math.comb(n + k - 1, k)

    def test_against_frozen_oracle_table(self):
        for (g, n, k), expected in FROZEN_SUMS.items():
            assert beauville_sum(g, n, k).value == expected, (g, n, k)

    @pytest.mark.parametrize("g,n,k", [(2, 2, 4), (3, 3, 2), (2, 4, 3)])
    def test_against_live_oracle(self, g, n, k):
        assert beauville_sum(g, n, k).value == brute_force_sum(g, n, k)


class TestSlDim:
    def test_rank_one_is_point(self):
        result = sl_dim(VerlindeQuery(3, 1, 11, 9))
        assert result == DimResult(1, METHOD_RANK_ONE, False)

    def test_degree_zero_mod_rank_uses_trig_sum(self):
        result = sl_dim(VerlindeQuery(2, 2, 0, 1))
        assert result.value == 4 and result.method == METHOD_TRIG

    def test_genus_one_symmetric_power(self):
        result = sl_dim(VerlindeQuery(1, 4, 2, 3))
        assert result == DimResult(4, METHOD_ELLIPTIC, False)

    def test_unsupported_regime(self):
        with pytest.raises(UnsupportedQuery):
            sl_dim(VerlindeQuery(5, 3, 7, 2))

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("g", range(2, 5))
    def test_level_one_law(self, n, g):
        assert sl_dim(VerlindeQuery(g, n, 0, 1)).value == n**g

    def test_degree_periodicity(self):
        for g in range(1, 4):
            for n in range(1, 5):
                for k in range(1, 4):
                    for d in range(-6, 7):
                        try:
                            base = sl_dim(VerlindeQuery(g, n, d, k)).value
                        except UnsupportedQuery:
                            with pytest.raises(UnsupportedQuery):
                                sl_dim(VerlindeQuery(g, n, d + n, k))
                            continue
                        assert sl_dim(VerlindeQuery(g, n, d + n, k)).value == base

    def test_level_rank_symmetry(self):
        for g in (2, 3):
            for n in range(1, 6):
                for k in range(1, 6):
                    lhs = sl_dim(VerlindeQuery(g, n, 0, k)).value * k**g
                    rhs = sl_dim(VerlindeQuery(g, k, 0, n)).value * n**g
                    assert lhs == rhs, (g, n, k)


class TestGlDim:
    def test_unique_section_of_canonical_theta(self):
        # M(2, 2(g-1)) at g = 2 carries a one-dimensional space at level 1.
        assert gl_dim(VerlindeQuery(2, 2, 2, 1)).value == 1

    def test_jacobian_level_power(self):
        result = gl_dim(VerlindeQuery(3, 1, 5, 2))
        assert result == DimResult(8, METHOD_TRANSFER, False)

    def test_degree_zero(self):
        result = gl_dim(VerlindeQuery(2, 2, 0, 1))
        assert result.value == 1 and result.certified

    def test_unsupported_propagates(self):
        with pytest.raises(UnsupportedQuery):
            gl_dim(VerlindeQuery(4, 3, 2, 1))

    def test_rank_one_full_moduli_matches_jacobian_count(self):
        # two routes to the same number: the transfer from a point moduli
        # space, and the abelian-variety section count m^g
        for g in range(1, 5):
            for d in (-3, 0, 5):
                for k in range(1, 5):
                    assert gl_dim(VerlindeQuery(g, 1, d, k)).value == jacobian_theta_dim(g, k)

    def test_no_integrality_violation_on_grid(self):
        for g in range(1, 5):
            for n in range(1, 6):
                for d in range(-10, 11):
                    for k in range(1, 6):
                        try:
                            result = gl_dim(VerlindeQuery(g, n, d, k))
                        except UnsupportedQuery:
                            continue
                        assert result.value >= 0


class TestClosedForms:
    def test_jacobian_theta_dim(self):
        assert jacobian_theta_dim(2, 3) == 9
        assert jacobian_theta_dim(3, 2) == 8
        for g in range(1, 6):
            assert jacobian_theta_dim(g, 1) == 1

    def test_jacobian_theta_dim_rejects_bad_power(self):
        with pytest.raises(ValueError):
            jacobian_theta_dim(2, 0)
        with pytest.raises(ValueError):
            jacobian_theta_dim(0, 2)

    def test_symmetric_power_dim(self):
        assert symmetric_power_dim(2, 3) == 4
        assert symmetric_power_dim(1, 5) == 1
        assert symmetric_power_dim(3, 2) == 6
        assert symmetric_power_dim(0, 0) == 1
        assert symmetric_power_dim(5, 0) == 1
        assert symmetric_power_dim(0, 4) == 0

    def test_symmetric_power_rows(self):
        for m in range(1, 21):
            assert symmetric_power_dim(m, 1) == m
        for k in range(1, 21):
            assert symmetric_power_dim(1, k) == 1

    def test_elliptic_h0(self):
        assert elliptic_h0(1) == 1
        assert elliptic_h0(2) == 2
        assert elliptic_h0(17) == 17
        with pytest.raises(ValueError):
            elliptic_h0(0)
        with pytest.raises(ValueError):
            elliptic_h0(-3)
