"""Unit tests for symmetric-function evaluation."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurkernels import partitions as pt
from schurkernels.kernels import random_rationals
from schurkernels.scalars import QRat
from schurkernels.symfun import (chebyshev_u, complete_h, dual_cauchy_check,
                                 elementary, qdim, schur_bialternant,
                                 schur_eval, schur_principal)

F = Fraction


class TestElementaryComplete:
    def test_k0(self):
        assert elementary(0, [F(2), F(3)]) == 1
        assert complete_h(0, [F(2)]) == 1

    def test_e2_ones(self):
        assert elementary(2, [F(1)] * 3) == 3

    def test_h2_ones(self):
        assert complete_h(2, [F(1)] * 2) == 3

    def test_e_beyond_length(self):
        assert elementary(3, [F(1), F(2)]) == 0

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            elementary(-1, [F(1)])


class TestSchurEval:
    def test_empty(self):
        assert schur_eval((), [F(2), F(5)]) == 1

    def test_single_row_is_e1(self):
        z = [F(1, 2), F(3), F(-2)]
        assert schur_eval((1,), z) == sum(z)

    def test_tableau_count(self):
        assert schur_eval((2, 1), [F(1)] * 3) == 8

    def test_too_long_is_zero(self):
        assert schur_eval((1, 1, 1), [F(1), F(2)]) == 0

    def test_repeated_points_fine(self):
        assert schur_eval((2, 2), [F(1), F(1), F(1), F(1)]) == 20

    def test_matches_bialternant_at_distinct_points(self):
        rng = random.Random(5)
        for lam in pt.enumerate_bounded(3, 3):
            z = random_rationals(rng, 3)
            assert schur_eval(lam, z) == schur_bialternant(lam, z)

    def test_symmetry_under_permutations(self):
        rng = random.Random(9)
        z = random_rationals(rng, 4)
        base = schur_eval((3, 1), z)
        for _ in range(20):
            zz = z[:]
            rng.shuffle(zz)
            assert schur_eval((3, 1), zz) == base

    def test_qrat_points(self):
        z = [QRat.u_power(1), QRat.u_power(-1)]
        assert schur_eval((1,), z) == QRat.u_power(1) + QRat.u_power(-1)


class TestSchurPrincipal:
    def test_single_box(self):
        for m in range(1, 6):
            assert schur_principal((1,), m) == m

    def test_21_at_3(self):
        assert schur_principal((2, 1), 3) == 8

    def test_22_at_4(self):
        assert schur_principal((2, 2), 4) == 20

    def test_matches_eval_on_grid(self):
        for lam in pt.enumerate_bounded(3, 3):
            for m in range(1, 6):
                assert schur_principal(lam, m) == schur_eval(lam, [F(1)] * m)


class TestQDim:
    def test_empty(self):
        assert qdim((), 3) == QRat.const(1)

    def test_single_box_m2(self):
        assert qdim((1,), 2) == QRat.u_power(-1) + QRat.u_power(1)

    def test_single_box_m3_telescopes(self):
        assert qdim((1,), 3) == QRat.u_power(-2) + QRat.const(1) + QRat.u_power(2)

    def test_too_long(self):
        with pytest.raises(ValueError):
            qdim((1, 1, 1), 2)

    def test_u1_limit_is_principal(self):
        for mu in pt.enumerate_bounded(3, 3):
            for m in range(len(mu), 5):
                assert qdim(mu, m).subs_u1() == schur_principal(mu, m)


class TestDualCauchy:
    def test_degenerate(self):
        assert dual_cauchy_check([], [F(1)]) == (1, 1)
        assert dual_cauchy_check([F(1), F(1)], []) == (1, 1)

    def test_small_exact(self):
        lhs, rhs = dual_cauchy_check([F(1), F(1)], [F(1)])
        assert lhs == rhs == 4

    @pytest.mark.parametrize("rows,cols", [(2, 2), (2, 3), (4, 2)])
    def test_seeded_random_points(self, rows, cols):
        rng = random.Random(11)
        for _ in range(20):
            t = random_rationals(rng, rows, nonzero=False, distinct=False)
            z = random_rationals(rng, cols, nonzero=False, distinct=False)
            lhs, rhs = dual_cauchy_check(t, z)
            assert lhs == rhs


class TestChebyshev:
    def test_u0_u1(self):
        assert chebyshev_u(0, F(7)) == 1
        assert chebyshev_u(1, F(7)) == 14

    def test_u2_at_zero(self):
        assert chebyshev_u(2, F(0)) == -1

    def test_u_at_one(self):
        for k in range(8):
            assert chebyshev_u(k, F(1)) == k + 1

    @given(st.integers(min_value=0, max_value=5),
           st.integers(min_value=0, max_value=5),
           st.fractions(min_value=F(1, 4), max_value=4))
    @settings(max_examples=80, deadline=None)
    def test_two_variable_bridge(self, j, k, x):
        """s_(k+j,k)(x, 1/x) = U_j((x + 1/x)/2): the Schur-Chebyshev map."""
        if x == 0:
            return
        w = (x + 1 / x) / 2
        assert schur_eval((k + j, k), [x, 1 / x]) == chebyshev_u(j, w)
