"""The rank-two family: orderings, functional equations, RH, counterexample."""

import math
import random
from fractions import Fraction

import pytest

from curvezeta.artin import CurveData
from curvezeta.exact import Poly, RationalFunction, ratfun_equal
from curvezeta.group_zeta import slr_zeta
from curvezeta.yoshida import (
    C1Params,
    HalfShiftRational,
    Ordering,
    WeilPairSet,
    boundary_values,
    build_XY,
    canonical_group_cross_check,
    counterexample_search,
    modulus_ordering,
    rh_check_zeta2,
    sextic_identity_report,
    x1_fe_check,
    y_fe_check,
    zeta2_canonical,
    zeta2_family,
    zeta2_family_numeric,
    zeta2_fe_check,
)

F = Fraction


class TestHalfShiftRational:
    def test_square_q_folds(self):
        x = HalfShiftRational.sqrt_power(4, 3)  # (sqrt 4)^3 = 8
        assert x.odd.is_zero() and x.even == RationalFunction.constant(8)

    def test_field_identities(self):
        a = HalfShiftRational(2, RationalFunction([1, 1]), RationalFunction([0, 2]))
        b = HalfShiftRational(2, RationalFunction([3]), RationalFunction([1]))
        assert (a * b) / b == a
        assert a - a == HalfShiftRational.of(2, 0)
        assert (a + b) - b == a

    def test_sqrt_squares_to_q(self):
        s = HalfShiftRational.sqrt_power(3, 1)
        assert s * s == HalfShiftRational.of(3, 3)

    def test_numeric_evaluation(self):
        a = HalfShiftRational(2, RationalFunction([1]), RationalFunction([0, 1]))
        val = a.evaluate(0.25)
        assert abs(val - (1 + math.sqrt(2) * 0.25)) < 1e-15


class TestModulusOrdering:
    def test_at_origin(self):
        assert modulus_ordering(2, 3, (0, 0)) is Ordering.GT

    def test_on_unit_circle(self):
        assert modulus_ordering(2, 0, (0, 1)) is Ordering.EQ

    def test_outside(self):
        assert modulus_ordering(2, 3, (2, 0)) is Ordering.LT

    def test_hypothesis_violation(self):
        with pytest.raises(ValueError):
            modulus_ordering(2, 4, (0, 0))
        with pytest.raises(ValueError):
            modulus_ordering(1, 0, (0, 0))

    def test_fuzz_10k_exact(self):
        rng = random.Random(1234)
        hits = {Ordering.LT: 0, Ordering.EQ: 0, Ordering.GT: 0}
        for k in range(10_000):
            q = 1 + F(rng.randint(1, 144), 16)
            c = F(rng.randint(-32, 32), 32) * (q + 1)
            if k % 5 == 0:
                # exact |w| = 1 through the circle parametrization
                t = F(rng.randint(-40, 40), 17)
                w = (
                    (1 - t * t) / (1 + t * t) * rng.choice([1, -1]),
                    2 * t / (1 + t * t) * rng.choice([1, -1]),
                )
            else:
                w = (F(rng.randint(-300, 300), 100), F(rng.randint(-300, 300), 100))
            norm = w[0] * w[0] + w[1] * w[1]
            verdict = modulus_ordering(q, c, w)
            if norm == 1:
                assert verdict is Ordering.EQ
            elif norm < 1:
                assert verdict is Ordering.GT
            else:
                assert verdict is Ordering.LT
            hits[verdict] += 1
        assert min(hits.values()) > 100  # all three outcomes exercised

    def test_float_path_slack(self):
        assert modulus_ordering(2.0, 2.5, complex(0.6, 0.8)) is Ordering.EQ


class TestXY:
    def test_x1_from_single_pair(self):
        xy = build_XY(WeilPairSet.from_pair_sums(2, [0]))
        assert xy.x1 == RationalFunction([1, 0, 2])

    def test_empty_pair_set_is_projective_line(self):
        xy = build_XY(WeilPairSet.from_pair_sums(3, []))
        assert xy.x1 == RationalFunction.one()
        assert xy.x == RationalFunction([1], [1, -4, 3])

    def test_functional_equations(self, corpus):
        for c in corpus:
            if c.g < 1:
                continue
            xy = build_XY(WeilPairSet.from_curve(c))
            assert x1_fe_check(xy), c.describe()
            assert y_fe_check(xy), c.describe()

    def test_pair_sum_bound(self):
        with pytest.raises(ValueError):
            WeilPairSet.from_pair_sums(2, [4])


class TestSexticIdentity:
    def test_fixture_numbers(self):
        rep = sextic_identity_report(2, 0)
        assert rep["expansion_ok"]
        assert rep["corrected_factorization_ok"]
        assert not rep["literal_factorization_ok"]
        assert rep["quartic"] == Poly([1, 0, 1, 0, 4])

    @pytest.mark.parametrize("q", [2, 3, 4, 5])
    def test_all_integer_traces(self, q):
        for c in range(-(q + 1), q + 2):
            rep = sextic_identity_report(q, c)
            assert rep["expansion_ok"], (q, c)
            assert rep["corrected_factorization_ok"], (q, c)

    def test_a_zero_loses_the_trace(self):
        # with a = 0 the trace drops out of the numerator entirely
        polys = set()
        for c in (-2, 0, 2):
            ws = WeilPairSet.from_pair_sums(2, [c])
            z = zeta2_family(ws, C1Params(a=0))
            num = (z.even.num.monic(), z.even.den.monic())
            polys.add(num)
        assert len(polys) == 1


class TestFamily:
    def test_functional_equation_exact(self, corpus):
        for c in corpus:
            if c.g < 1:
                continue
            z = zeta2_canonical(c)
            assert zeta2_fe_check(z), c.describe()

    def test_family_with_extra_pair_fe(self):
        ws = WeilPairSet.from_pair_sums(2, [0])
        z = zeta2_family(ws, C1Params(a=1, extra_pair_sums=(F(3),)))
        assert zeta2_fe_check(z)

    def test_extra_pair_bound(self):
        ws = WeilPairSet.from_pair_sums(2, [0])
        with pytest.raises(ValueError):
            zeta2_family(ws, C1Params(a=1, extra_pair_sums=(F(7, 2),)))

    def test_exact_needs_integer_exponent(self):
        ws = WeilPairSet.from_pair_sums(2, [0])
        with pytest.raises(ValueError):
            zeta2_family(ws, C1Params(a=0.5))

    def test_numeric_matches_exact(self):
        ws = WeilPairSet.from_pair_sums(2, [1])
        z = zeta2_family(ws, C1Params(a=1))
        fn = zeta2_family_numeric(ws, C1Params(a=1))
        for s in (0.3 + 0.7j, 1.2 - 0.4j, 2.5 + 0j):
            t = 2.0**-s
            assert abs(z.evaluate(t) - fn(s)) < 1e-9 * (1 + abs(fn(s)))

    def test_numeric_fe_at_random_points(self):
        ws = WeilPairSet.from_pair_sums(3, [2])
        fn = zeta2_family_numeric(ws, C1Params(a=1.0))
        rng = random.Random(5)
        for _ in range(100):
            s = complex(rng.uniform(-2, 3), rng.uniform(-8, 8))
            lhs, rhs = fn(1 - s), fn(s)
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))

    def test_genus_two_alternative_exponent(self, curve_g2):
        ws = WeilPairSet.from_curve(curve_g2)
        zg = zeta2_family(ws, C1Params(a=curve_g2.g))
        assert zeta2_fe_check(zg)


class TestRhChecks:
    def test_canonical_over_elliptic_grid(self):
        for q in (2, 3, 4, 5):
            bound = int((4 * q) ** 0.5)
            for a in range(-bound, bound + 1):
                c = CurveData.elliptic(q, a)
                rep = rh_check_zeta2(zeta2_canonical(c))
                assert rep.verdict, (q, a, rep.max_deviation)

    def test_family_with_admissible_extra_pair(self):
        ws = WeilPairSet.from_pair_sums(2, [0])
        z = zeta2_family(ws, C1Params(a=1, extra_pair_sums=(F(3),)))
        rep = rh_check_zeta2(z)
        assert rep.verdict

    def test_zeros_match_group_route(self, curve_g1, curve_g2):
        # the canonical numerator is the T-grid numerator stretched to t^2:
        # the prefactor zeros cancel against the denominator exactly.  The
        # value sits in the parity component picked by (sqrt q)^{-(g-1)}.
        for c in (curve_g1, curve_g2):
            z = zeta2_canonical(c)
            part = z.even if c.g % 2 == 1 else z.odd
            assert (z.odd if c.g % 2 == 1 else z.even).is_zero()
            A = slr_zeta(c, 2).numerator_T
            stretched = Poly(A).stretch(2)
            assert ratfun_equal(
                RationalFunction(part.num.monic()), RationalFunction(stretched.monic())
            ), c.describe()

    def test_cross_check_constant(self, corpus):
        for c in corpus[:8]:
            if c.g < 1:
                continue
            half_power = canonical_group_cross_check(c, slr_zeta(c, 2).combined)
            assert half_power == c.g - 1, c.describe()


class TestCounterexample:
    def test_boundary_signs(self):
        alpha = complex(0, math.sqrt(2))
        for m in (1, 2, 8, 32):
            f_val, g_val = boundary_values(2, alpha, m)
            assert g_val == 0.0
            assert f_val > 0

    def test_search_finds_small_multiplicity(self):
        res = counterexample_search(2, complex(0, math.sqrt(2)), range(1, 65))
        assert res.found
        assert res.m <= 64
        assert -math.sqrt(2) < res.w1 < -1
        assert res.residual <= 1e-10
        assert res.re_s_deviation >= 1e-3
        assert abs(res.s.real - 0.5) == pytest.approx(res.re_s_deviation)

    def test_no_crossing_reports_not_found(self):
        res = counterexample_search(2, complex(0, math.sqrt(2)), range(1, 2))
        assert not res.found

    def test_off_circle_alpha_rejected(self):
        with pytest.raises(ValueError):
            counterexample_search(2, complex(1, 1.5))
