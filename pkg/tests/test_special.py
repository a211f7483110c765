import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from gpsel.errors import DivergentIntegral, DomainError
from gpsel.special import Hyp2f1Params, g_integral_oracle, hyp2f1, log_hyp2f1
from oracles import mp_hyp2f1, mp_series_hyp2f1, rational_series_hyp2f1

params = st.tuples(
    st.floats(0.1, 200.0), st.sampled_from([1.0, 2.0]), st.floats(0.5, 9.0), st.floats(0.0, 0.999),
)


@settings(max_examples=150, deadline=None)
@given(params)
def test_against_extended_precision(t):
    a, b, c, x = t
    ref = mp_hyp2f1(a, b, c, x)
    got = log_hyp2f1(a, b, c, x)
    assert abs(math.exp(got - float(mpmath.log(ref))) - 1) < 1e-10


@pytest.mark.parametrize("a,b,c,x", [
    (0.5, 1, 1.5, 0.3), (3, 2, 4.5, 0.45), (7.5, 1, 2.5, 0.2), (1, 1, 2, 0.5),
])
def test_against_exact_rational_series(a, b, c, x):
    assert hyp2f1(a, b, c, x) == pytest.approx(rational_series_hyp2f1(a, b, c, x), rel=1e-12)


@pytest.mark.parametrize("a,b,c,x", [(200.0, 1.0, 8.0, 0.95), (12.5, 2.0, 3.5, 0.999)])
def test_large_a_against_mp_series(a, b, c, x):
    ref = float(mpmath.log(mp_series_hyp2f1(a, b, c, x)))
    assert log_hyp2f1(a, b, c, x) == pytest.approx(ref, rel=1e-12)


@settings(max_examples=80, deadline=None)
@given(a=st.floats(0.1, 50), b=st.floats(0.1, 10), x=st.floats(0.0, 0.99))
def test_identity_c_equals_b(a, b, x):
    assert log_hyp2f1(a, b, b, x) == pytest.approx(-a * math.log1p(-x), rel=1e-10, abs=1e-12)


@settings(max_examples=80, deadline=None)
@given(x=st.floats(1e-6, 0.999))
def test_identity_log(x):
    assert hyp2f1(1, 1, 2, x) == pytest.approx(-math.log1p(-x) / x, rel=1e-10)


@settings(max_examples=80, deadline=None)
@given(a=st.floats(0.1, 30), b=st.sampled_from([1.0, 2.0]), c=st.floats(0.5, 12), x=st.floats(0.0, 0.99))
def test_identity_euler(a, b, c, x):
    assume(c - a > 0 and c - b > 0)
    lhs = log_hyp2f1(a, b, c, x)
    rhs = (c - a - b) * math.log1p(-x) + log_hyp2f1(c - a, c - b, c, x)
    assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)


@settings(max_examples=60, deadline=None)
@given(a=st.floats(0.5, 100), b=st.sampled_from([1.0, 2.0]), c=st.floats(0.5, 10),
       x1=st.floats(0, 0.998), dx=st.floats(1e-4, 0.5))
def test_monotone_in_x(a, b, c, x1, dx):
    x2 = min(x1 + dx, 0.999)
    assert log_hyp2f1(a, b, c, x1) <= log_hyp2f1(a, b, c, x2)


def test_params_validation():
    with pytest.raises(DomainError):
        Hyp2f1Params(1.0, 1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        Hyp2f1Params(-1.0, 1.0, 1.0, 0.2)
    p = Hyp2f1Params(2.0, 1.0, 3.0, 0.4)
    assert log_hyp2f1(p) == pytest.approx(log_hyp2f1(2.0, 1.0, 3.0, 0.4))


def test_complement_argument_keeps_precision():
    # x = 1 - 1e-13 cannot be represented accurately; passing 1 - x directly can
    got = log_hyp2f1(5.0, 1.0, 2.5, 1 - 1e-13, xc=1e-13)
    with mpmath.workdps(50):
        ref = float(mpmath.log(mpmath.hyp2f1(5, 1, 2.5, 1 - mpmath.mpf("1e-13"))))
    assert got == pytest.approx(ref, rel=1e-10)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(6, 30), p=st.integers(0, 3), r2=st.floats(0.0, 0.97))
def test_oracle_matches_closed_form(n, p, r2):
    # (1+g)^{(n-p-3)/2}(1+g(1-r2))^{-n/2} integrates to 2/(p+1) F(n/2, 1; (p+3)/2; r2)
    lhs = g_integral_oracle(n, p, r2)
    rhs = math.log(2.0 / (p + 1)) + log_hyp2f1(n / 2, 1, (p + 3) / 2, r2)
    assert lhs == pytest.approx(rhs, rel=1e-8, abs=1e-9)


def test_oracle_divergence_guard():
    with pytest.raises(DivergentIntegral):
        g_integral_oracle(10, 1, 0.5, prior_exponent=1.0)
    with pytest.raises(DomainError):
        g_integral_oracle(10, 1, 1.0)


def test_vectorised_agreement_with_scipy_where_safe():
    from scipy.special import hyp2f1 as sp
    for a, b, c, x in [(3.0, 1.0, 2.5, 0.3), (10.0, 2.0, 4.0, 0.45)]:
        assert hyp2f1(a, b, c, x) == pytest.approx(float(sp(a, b, c, x)), rel=1e-12)
        assert np.isfinite(log_hyp2f1(a, b, c, x))
