"""Rank-one invariants: triangular conversions, gamma, the genus-one oracle."""

import random
from fractions import Fraction

import pytest

from curvezeta.artin import CurveData
from curvezeta.invariants import (
    A_from_alpha,
    alpha_degree,
    alpha_from_A,
    beta0,
    elliptic_oracle,
    gamma,
    invariant_table,
    middle_coefficient_identity_check,
)

F = Fraction


def random_palindromic(rng: random.Random, q: int, g: int) -> CurveData:
    """Synthetic symmetric data; no positivity, just the coefficient symmetry."""
    A = [F(1)] + [F(rng.randint(-40, 40)) for _ in range(g)]
    full = list(A) + [0] * g
    for i in range(g):
        full[2 * g - i] = F(q) ** (g - i) * full[i]
    return CurveData(q, g, full)


class TestAlphaFromA:
    def test_alpha0_is_one(self, corpus):
        for c in corpus:
            assert alpha_from_A(c)[0] == 1

    def test_quintic_alpha1(self, curve_g2):
        assert alpha_from_A(curve_g2) == [1, 3]

    def test_synthetic_genus3(self):
        c = CurveData(2, 3, [1, 1, 2, 6, 4, 4, 8])
        assert alpha_from_A(c) == [1, 4, 12]

    def test_genus_zero_unsupported(self):
        with pytest.raises(ValueError):
            alpha_from_A(CurveData(2, 0, [1], genuine=True))


class TestAFromAlpha:
    def test_worked_example(self):
        assert A_from_alpha([1, 3], 5, 2, 2) == [1, 0, 0]

    def test_genus_one_closed_form(self):
        assert A_from_alpha([1], 3, 2, 1) == [1, 0]

    def test_roundtrip_200_random(self):
        rng = random.Random(20260810)
        for _ in range(200):
            q = rng.choice([2, 3, 4, 5])
            g = rng.randint(2, 10)
            c = random_palindromic(rng, q, g)
            back = A_from_alpha(alpha_from_A(c), beta0(c), q, g)
            assert back == list(c.A[: g + 1])
            assert middle_coefficient_identity_check(c)

    def test_roundtrip_genus_one(self):
        rng = random.Random(7)
        for _ in range(50):
            q = rng.choice([2, 3, 4, 5])
            c = random_palindromic(rng, q, 1)
            assert A_from_alpha(alpha_from_A(c), beta0(c), q, 1) == list(c.A[:2])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            A_from_alpha([1, 2, 3], 1, 2, 2)


class TestBeta0:
    def test_examples(self, curve_g1, curve_g2):
        assert beta0(curve_g1) == 3
        assert beta0(curve_g2) == 5
        assert beta0(CurveData(3, 1, [1, -1, 3])) == F(3, 2)


class TestGamma:
    def test_beyond_special_range(self, curve_g1):
        assert gamma(curve_g1, 2) == 12

    def test_at_zero(self, curve_g1, curve_g2):
        assert gamma(curve_g1, 0) == 4
        assert gamma(curve_g2, 0) == 6

    def test_alpha_is_series_coefficient(self, corpus):
        for c in corpus:
            if c.g < 1:
                continue
            series = c.zeta_ratfun().series(2 * c.g + 2)
            for d in range(2 * c.g + 3):
                assert alpha_degree(c, d) == series[d]

    def test_alpha_duality_with_tail(self, corpus):
        # for g <= d <= 2g-2: alpha(d) = q^{d-g+1} alpha(2g-2-d) + b0 (q^{d-g+1}-1)
        for c in corpus:
            if c.g < 2:
                continue
            q, g = F(c.q), c.g
            for d in range(g, 2 * g - 1):
                expect = q ** (d - g + 1) * alpha_degree(c, 2 * g - 2 - d) + beta0(c) * (
                    q ** (d - g + 1) - 1
                )
                assert alpha_degree(c, d) == expect

    def test_closed_form_tail_consistency(self, corpus):
        for c in corpus:
            if c.g < 1:
                continue
            d = 2 * c.g + 1
            assert gamma(c, d) == alpha_degree(c, d) + beta0(c)


class TestClosingRowIdentity:
    def test_fixture(self, curve_g2):
        assert middle_coefficient_identity_check(curve_g2)

    def test_broken_by_perturbation(self):
        assert not middle_coefficient_identity_check(CurveData(2, 2, [1, 0, 0, 0, 5]))

    def test_needs_genus_two(self, curve_g1):
        with pytest.raises(ValueError):
            middle_coefficient_identity_check(curve_g1)


class TestEllipticOracle:
    def test_supersingular_q2(self):
        bn, table = elliptic_oracle(2, 0, 2)
        assert bn.w[(0, 1)] == 1 and bn.w[(0, 0)] == 2
        assert table.alphas == (1,)
        assert table.beta0 == 3
        assert table.gammas[0] == 4

    def test_class_number_one(self):
        _, table = elliptic_oracle(2, 2, 0)
        assert table.gammas[0] == 2  # q/(q-1) holds exactly when h = 1

    def test_q3_gamma1(self):
        _, table = elliptic_oracle(3, 0, 1)
        assert table.gammas[1] == 6

    def test_trace_bound(self):
        with pytest.raises(ValueError):
            elliptic_oracle(3, 4, 0)

    @pytest.mark.parametrize("q,a", [(2, 0), (2, -2), (3, 1), (4, -3), (5, 4)])
    def test_oracle_agrees_with_zeta_route(self, q, a):
        # elliptic_oracle raises internally if the two routes disagree
        bn, table = elliptic_oracle(q, a, 4)
        curve = CurveData.elliptic(q, a)
        for d in range(5):
            assert table.gammas[d] == gamma(curve, d)

    def test_brill_noether_invariants(self):
        for q, a in [(2, 1), (3, -2), (5, 0)]:
            bn, _ = elliptic_oracle(q, a, 3)
            bn.check(3)


def test_invariant_table_shape(curve_g2):
    table = invariant_table(curve_g2)
    assert table.r == 1
    assert len(table.alphas) == curve_g2.g
    assert set(table.gammas) == set(range(2 * curve_g2.g + 1))
    for d, val in table.gammas.items():
        assert val == alpha_degree(curve_g2, d) + table.beta0
