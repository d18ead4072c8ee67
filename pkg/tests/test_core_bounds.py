import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oppenheim.core_bounds import (HALF_PI, CusaTriple, PosParam, Radians, cusa_general,
                                   cusa_general_gap, cusa_lower_refined, cusa_lower_simple,
                                   oppenheim_bound, sinc)
from oppenheim.errors import DomainError

angles = st.floats(min_value=1e-6, max_value=HALF_PI)


def test_domain_types():
    assert float(Radians(0.0)) == 0.0
    assert float(Radians(HALF_PI)) == HALF_PI
    with pytest.raises(DomainError):
        Radians(-1e-12)
    with pytest.raises(DomainError):
        Radians(1.6)
    with pytest.raises(DomainError):
        PosParam(0.0)
    assert float(PosParam(0.3)) == 0.3


@pytest.mark.parametrize("x, p, c, expected", [
    (0.0, 1.0, 3.0, 0.0),
    (HALF_PI, 2.0, HALF_PI, HALF_PI),
    # 30-digit mpmath value
    (math.pi / 3, 0.5, 1.5, 1.0392304845413263762),
])
def test_oppenheim_bound_examples(x, p, c, expected):
    assert oppenheim_bound(x, p, c) == pytest.approx(expected, rel=1e-15, abs=1e-300)


def test_oppenheim_bound_rejects_bad_input():
    with pytest.raises(DomainError):
        oppenheim_bound(0.5, 1.0, 0.0)
    with pytest.raises(DomainError):
        oppenheim_bound(0.5, -1.0, 1.0)
    with pytest.raises(DomainError):
        oppenheim_bound(2.0, 1.0, 1.0)
    assert oppenheim_bound(Radians(0.5), PosParam(1.0), 1.0) == oppenheim_bound(0.5, 1.0, 1.0)


def test_oppenheim_bound_at_pi_over_3_satisfies_reversed_bound():
    # p = 1/2 with c = 1 + p is a lower bound of x
    assert oppenheim_bound(math.pi / 3, 0.5, 1.5) <= math.pi / 3


@given(angles, st.floats(0.01, 10), st.floats(0.01, 10), st.floats(0.01, 10))
def test_oppenheim_bound_monotone_in_c(x, p, c1, c2):
    lo, hi = sorted((c1, c2))
    assert oppenheim_bound(x, p, lo) <= oppenheim_bound(x, p, hi)


def test_sinc_examples():
    assert sinc(0.0) == 1.0
    assert sinc(HALF_PI) == pytest.approx(2 / math.pi, rel=1e-15)
    x = 1e-9
    assert sinc(x) == pytest.approx(1 - x * x / 6, rel=1e-16)


def test_sinc_matches_mpmath(mp50):
    for x in [1e-12, 2.0**-27, 2.0**-25, 1e-4, 0.3, 1.0, HALF_PI]:
        ref = mp50.sin(mp50.mpf(x)) / mp50.mpf(x)
        assert sinc(x) == pytest.approx(float(ref), rel=2e-16)


def test_sinc_strictly_decreasing():
    xs = np.linspace(0, HALF_PI, 10_001)
    assert np.all(np.diff(sinc(xs)) < 0)


def test_sinc_vectorised_shape():
    assert sinc(np.zeros((2, 3))).shape == (2, 3)


def test_cusa_lower_simple_examples():
    assert cusa_lower_simple(0.0) == 1.0
    assert cusa_lower_simple(HALF_PI) == pytest.approx(0.5, abs=1e-16)
    assert cusa_lower_simple(math.pi / 4) == pytest.approx(0.8535533905932737622, rel=1e-15)
    assert sinc(math.pi / 4) == pytest.approx(0.90031631615710606956, rel=1e-15)


def test_cusa_lower_refined_examples():
    assert cusa_lower_refined(0.0) == 1.0
    assert cusa_lower_refined(HALF_PI) == pytest.approx(0.59513272113248276987, rel=1e-15)
    assert sinc(HALF_PI) >= cusa_lower_refined(HALF_PI)


def test_cusa_lower_bounds_on_dense_grid():
    xs = np.linspace(0, HALF_PI, 100_001)[1:]
    s = sinc(xs)
    assert np.all(s >= cusa_lower_simple(xs))
    assert np.all(s - cusa_lower_refined(xs) >= -4 * np.finfo(float).eps)


def test_cusa_refined_vs_simple_is_only_reported():
    # no ordering is claimed; record both values at pi/4
    simple, refined = cusa_lower_simple(math.pi / 4), cusa_lower_refined(math.pi / 4)
    assert refined == pytest.approx(0.89729791533599764641, rel=1e-15)
    assert simple == pytest.approx(0.8535533905932737622, rel=1e-15)


def test_cusa_triple_validation():
    CusaTriple(2, 1, 3)
    CusaTriple(2, 1, 2)   # 2b = c admitted
    CusaTriple(3, 1, 4)   # c = a + b admitted
    with pytest.raises(DomainError):
        CusaTriple(1, 1, 1)
    with pytest.raises(DomainError):
        CusaTriple(0, 1, 3)
    with pytest.raises(DomainError):
        CusaTriple(1, 1, 3)


def test_cusa_general_examples():
    t = CusaTriple(2, 1, 3)
    assert cusa_general(math.pi / 4, t) == pytest.approx(0.78361162489122432754, rel=1e-15)
    assert cusa_general(math.pi / 4, t) < math.pi / 4
    x = 1e-7
    assert cusa_general(x, t) / x == pytest.approx(1.0, rel=1e-13)


def test_cusa_general_rejects_closed_endpoints():
    t = CusaTriple(2, 1, 3)
    for x in (0.0, HALF_PI):
        with pytest.raises(DomainError):
            cusa_general(x, t)
        with pytest.raises(DomainError):
            cusa_general_gap(x, t)


def test_cusa_gap_against_mpmath(mp50):
    t = CusaTriple(2, 1, 3)
    for x in [1e-6, 1e-3, 0.1, 0.49, 0.5, 1.0, 1.5]:
        X = mp50.mpf(x)
        ref = X - 3 * mp50.sin(X) / (2 + mp50.cos(X))
        assert cusa_general_gap(x, t) == pytest.approx(float(ref), rel=1e-12)
    # leading term x^5/180
    assert cusa_general_gap(1e-4, t) == pytest.approx(1e-20 / 180, rel=1e-6)
