import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oppenheim import analysis as an
from oppenheim.core_bounds import HALF_PI, CusaTriple, cusa_general_gap
from oppenheim.errors import DomainError, RegimeError
from oppenheim.verify import brute_force_constants

INTERIOR = np.linspace(0, HALF_PI, 20_001)[1:-1]


def mp_f(mp, x, p):
    x, p = mp.mpf(x), mp.mpf(p)
    return mp.sin(x) / (x * (1 + p * mp.cos(x)))


def mp_h(mp, x):
    x = mp.mpf(x)
    return (mp.sin(x) - x * mp.cos(x)) / (x - mp.sin(x) * mp.cos(x))


class TestF:
    def test_limits(self):
        for p in (0.3, 1.0, 2.5):
            assert an.f_p(0.0, p) == pytest.approx(1 / (1 + p), rel=1e-16)
            assert an.f_p(1e-8, p) == pytest.approx(1 / (1 + p), abs=1e-12)
            assert an.f_p(HALF_PI, p) == pytest.approx(2 / math.pi, rel=4e-16)

    def test_pi_over_4(self):
        assert an.f_p(math.pi / 4, 1.0) == pytest.approx(0.52739308757904945296, rel=1e-15)

    def test_against_mpmath(self, mp50):
        for x in (1e-5, 0.2, 0.7, 1.3, HALF_PI):
            for p in (0.1, 0.55, 2.0):
                assert an.f_p(x, p) == pytest.approx(float(mp_f(mp50, x, p)), rel=1e-15)

    def test_excess_against_mpmath(self, mp50):
        for x in (1e-6, 1e-3, 0.1, 0.49, 0.51, 1.2):
            for p in (0.1, 0.5, 0.55, 3.0):
                ref = mp_f(mp50, x, p) - 1 / (1 + mp50.mpf(p))
                assert an.f_p_excess(x, p) == pytest.approx(float(ref), rel=1e-11)

    def test_excess_zero_at_origin(self):
        assert an.f_p_excess(0.0, 0.3) == 0.0


class TestDerivative:
    def test_vanishes_where_p_equals_h(self):
        for x in (0.3, 0.9, 1.4):
            assert an.f_p_prime(x, an.h(x)) == 0.0

    def test_signs(self):
        assert an.f_p_prime(math.pi / 4, 1.0) > 0
        assert an.f_p_prime(math.pi / 4, 0.4) < 0

    def test_signs_by_finite_differences(self):
        step = 1e-6
        x = math.pi / 4
        for p in (1.0, 0.4):
            fd = (an.f_p(x + step, p) - an.f_p(x - step, p)) / (2 * step)
            assert np.sign(fd) == np.sign(an.f_p_prime(x, p))

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            an.f_p_prime(0.0, 1.0)

    def test_numpy_finite_difference_check(self):
        rng = np.random.default_rng(7)
        xs = rng.uniform(1e-3, HALF_PI - 1e-3, 200)
        ps = rng.uniform(0.05, 3.0, 200)
        for x, p in zip(xs, ps):
            s = min(1e-3, x / 3, (HALF_PI - x) / 3)
            fd = (-an.f_p(x + 2 * s, p) + 8 * an.f_p(x + s, p) - 8 * an.f_p(x - s, p)
                  + an.f_p(x - 2 * s, p)) / (12 * s)
            exact = an.f_p_prime(x, p)
            assert abs(exact - fd) <= 1e-6 * max(abs(exact), 1e-3)

    def test_sign_matches_p_minus_h(self):
        for p in (0.3, 0.55, 1.0):
            assert np.all(np.sign(an.f_p_prime(INTERIOR, p)) == np.sign(p - an.h(INTERIOR)))


class TestProofChain:
    def test_h_endpoints(self):
        assert an.h(0.0) == 0.5
        assert an.h(HALF_PI) == 2 / math.pi
        assert abs(an.h(1e-6) - 0.5) <= 1e-9

    def test_h_pi_over_4(self):
        v = an.h(math.pi / 4)
        assert v == pytest.approx(0.53170073734997440836, rel=1e-15)
        assert 0.5 < v < 2 / math.pi

    def test_h_against_mpmath(self, mp50):
        for x in (1e-7, 1e-4, 0.01, 0.3, 0.4999, 0.5001, 1.0, 1.5):
            assert an.h(x) == pytest.approx(float(mp_h(mp50, x)), rel=4e-16)

    def test_h_small_x_series(self):
        # h = 1/2 + x^2/20 + O(x^4)
        x = 1e-3
        assert an.h(x) - 0.5 == pytest.approx(x * x / 20, rel=1e-5)

    def test_h_prime_closed_form_matches_differences(self):
        for x in (0.1, 0.7, 1.3):
            s = 1e-5
            assert an.h_prime(x) == pytest.approx((an.h(x + s) - an.h(x - s)) / (2 * s), rel=1e-6)

    def test_g_values(self):
        assert an.g(0.0) == 0.0
        assert an.g_prime(0.0) == 0.0
        assert an.g(HALF_PI) == pytest.approx(0.93480220054467930942, rel=1e-14)
        assert an.g_second(math.pi / 4) == pytest.approx(4 - math.pi, rel=1e-14)

    def test_g_second_tan_form(self):
        xs = np.linspace(0.6, 1.5, 50)
        tan_form = 8 * (np.tan(xs) - xs) * np.sin(xs) * np.cos(xs)
        assert np.allclose(an.g_second(xs), tan_form, rtol=1e-12)

    def test_g_series_continuity_at_cutoff(self, mp50):
        for x in (0.4999999, 0.5, 0.5000001):
            X = mp50.mpf(x)
            ref = 2 * X**2 + X * mp50.sin(2 * X) + 2 * mp50.cos(2 * X) - 2
            assert an.g(x) == pytest.approx(float(ref), rel=1e-11)

    def test_sign_chain_on_dense_grid(self):
        assert np.all(an.g_second(INTERIOR) > 0)
        assert np.all(an.g_prime(INTERIOR) > 0)
        assert np.all(an.g(INTERIOR) > 0)
        assert np.all(np.diff(an.h(INTERIOR)) > 0)


class TestRegimes:
    @pytest.mark.parametrize("p, regime", [
        (0.3, an.Regime.LOW), (0.5, an.Regime.MID_A), (0.55, an.Regime.MID_A),
        (math.pi / 2 - 1, an.Regime.MID_B), (0.6, an.Regime.MID_B),
        (2 / math.pi, an.Regime.HIGH), (0.75, an.Regime.HIGH), (100.0, an.Regime.HIGH),
    ])
    def test_classify(self, p, regime):
        assert an.classify(p) is regime

    @given(st.floats(1e-6, 1e6))
    def test_regimes_partition(self, p):
        hits = [r for r in an.Regime if r.boundaries[0] <= p < r.boundaries[1]]
        assert hits == [an.classify(p)]

    def test_classify_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            an.classify(0.0)


class TestCriticalPoint:
    def test_p_055(self):
        x = an.critical_point(0.55)
        assert x == pytest.approx(0.97911972047050154784, rel=1e-14)
        assert abs(an.h(x) - 0.55) <= 1e-14
        assert an.f_p_prime(x - 1e-4, 0.55) > 0 > an.f_p_prime(x + 1e-4, 0.55)

    def test_limits(self):
        assert an.critical_point(0.5 + 1e-10) < 1e-3
        assert an.critical_point(2 / math.pi - 1e-12) > HALF_PI - 1e-4

    @pytest.mark.parametrize("p", [0.5, 0.3, 2 / math.pi, 1.0])
    def test_regime_error(self, p):
        with pytest.raises(RegimeError):
            an.critical_point(p)

    @settings(max_examples=50, deadline=None)
    @given(st.floats(0.5001, 0.6366))
    def test_root_accuracy(self, p):
        assert abs(an.h(an.critical_point(p)) - p) <= 1e-14


class TestConstants:
    def test_closed_form_examples(self):
        c = an.paper_constants(0.3)
        assert (c.q, c.r) == (1.3, math.pi / 2)
        c = an.paper_constants(0.5)
        assert c.q == pytest.approx(1.5) and c.r == math.pi / 2
        c = an.paper_constants(1.0)
        assert (c.q, c.r) == (math.pi / 2, 2.0)
        assert c.q_source is an.Source.PAPER_FORMULA

    def test_numeric_examples(self):
        c = an.numeric_constants(1.0)
        assert (c.q, c.r) == (math.pi / 2, 2.0)
        assert c.q_source is an.Source.NUMERIC_OPT
        c = an.numeric_constants(0.3)
        assert (c.q, c.r) == (1.3, math.pi / 2)

    def test_numeric_mid_regime(self, mp50):
        c = an.numeric_constants(0.55)
        assert c.q == pytest.approx(1.5415282125332739982, rel=1e-14)
        assert 4 * 0.55 * (1 - 0.55**2) <= c.q

    def test_mid_regime_against_brute_force(self):
        for p in (0.52, 0.55, 0.6, 0.63):
            num = an.numeric_constants(p)
            brute = brute_force_constants(p, 1_000_000)
            assert abs(num.q - brute.q) <= 1e-8
            assert abs(num.r - brute.r) <= 1e-8

    def test_closed_form_q_is_not_sharp_in_mid_regime(self):
        # the jump at 2/pi: 8(pi^2 - 4)/pi^3 versus pi/2
        p = 2 / math.pi - 1e-9
        assert an.paper_constants(p).q == pytest.approx(8 * (math.pi**2 - 4) / math.pi**3,
                                                        rel=1e-8)
        assert an.numeric_constants(p).q - an.paper_constants(p).q > 0.05

    def test_constant_pair_invariant(self):
        with pytest.raises(ValueError):
            an.ConstantPair(2.0, 1.0, an.Source.NUMERIC_OPT, an.Source.NUMERIC_OPT)

    @settings(max_examples=40, deadline=None)
    @given(st.floats(0.05, 3.0))
    def test_soundness_on_grid(self, p):
        xs = np.linspace(0, HALF_PI, 5001)
        c = an.numeric_constants(p)
        lower = c.q * np.sin(xs) / (1 + p * np.cos(xs))
        upper = c.r * np.sin(xs) / (1 + p * np.cos(xs))
        tol = 4 * np.finfo(float).eps * np.maximum(xs, 1e-300)
        assert np.all(lower - xs <= tol)
        assert np.all(xs - upper <= tol)


class TestCusaTripleCondition:
    def test_counterexample(self):
        t = CusaTriple(1, 1, 2)
        assert not an.cusa_triple_holds(t)
        xs = np.linspace(0, HALF_PI, 1001)[1:-1]
        assert np.all(cusa_general_gap(xs, t) < 0)

    def test_condition_matches_grid(self):
        rng = np.random.default_rng(3)
        xs = np.linspace(0, HALF_PI, 20_001)[1:-1]
        for _ in range(60):
            a = rng.uniform(0.5, 5)
            b = rng.uniform(0, a)
            c = rng.uniform(2 * b, a + b)
            t = CusaTriple(a, b, c)
            assert an.cusa_triple_holds(t) == bool(np.all(cusa_general_gap(xs, t) > 0))

    def test_always_holds_for_small_ratio(self):
        for a, b, c in [(2, 1, 3), (2, 1, 2), (10, 1, 11), (4, 2, 6)]:
            assert an.cusa_triple_holds(CusaTriple(a, b, c))
