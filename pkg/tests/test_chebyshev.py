import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import chebyshev_sympy, phi32_bruteforce
from expsubdiv.chebyshev import (
    ChebPoint,
    cheb_T,
    cheb_T_from_t,
    cheb_T_values,
    coupling_C,
    identity_sum_lhs,
    identity_sum_rhs,
    lemma_sum_lhs,
    recip_T_via_phi,
)
from expsubdiv.errors import DegenerateParameterError, DomainError

T_SET = (F(2), F(3, 2), F(5), F(7, 3))


def test_basic_values():
    assert all(cheb_T(n, F(1)) == 1 for n in range(12))
    assert cheb_T(2, F(5, 4)) == F(17, 8)
    for x in (F(0), F(1, 2), F(2)):
        assert cheb_T(3, x) == 4 * x**3 - 3 * x
    assert cheb_T_values(0, F(3)) == [1]


@pytest.mark.parametrize("n", range(0, 17))
def test_recurrence_matches_sympy(n):
    for x in (F(-7, 5), F(1, 3), F(13, 6)):
        assert cheb_T(n, x) == chebyshev_sympy(n, x)


def test_t_parameterization():
    assert cheb_T_from_t(0, F(9)) == 1
    assert cheb_T_from_t(2, F(2)) == cheb_T(2, F(5, 4)) == F(17, 8)
    assert cheb_T_from_t(1, F(3)) == cheb_T(1, F(5, 3)) == F(5, 3)
    with pytest.raises(DomainError):
        cheb_T_from_t(2, F(0))


@given(st.fractions(min_value=-9, max_value=9, max_denominator=11).filter(lambda t: t != 0), st.integers(0, 16))
def test_t_form_agrees_with_recurrence(t, n):
    assert cheb_T(n, (t + 1 / t) / 2) == cheb_T_from_t(n, t)


def test_float_trig_form():
    for k in range(1, 10):
        x = math.cos(k / 7)
        for n in range(12):
            assert abs(cheb_T(n, x) - math.cos(n * k / 7)) < 1e-12


def test_composition():
    xs = [math.cos(0.3 * j) for j in range(1, 11)]
    for m in range(6):
        for n in range(6):
            for x in xs:
                assert abs(cheb_T(m, cheb_T(n, x)) - cheb_T(m * n, x)) < 1e-12


def test_cheb_point():
    p = ChebPoint.from_t(F(2))
    assert p.x == F(5, 4)
    with pytest.raises(ValueError):
        ChebPoint(F(1), F(2))
    with pytest.raises(DomainError):
        ChebPoint.from_t(0)


def test_coupling_values():
    for v in (F(5, 4), F(3, 7), F(2), F(-1, 3), F(9, 10)):
        assert coupling_C(0, 1, v) == 1 / v
    with pytest.raises(DegenerateParameterError):
        coupling_C(0, 1, F(1))
    with pytest.raises(ValueError):
        coupling_C(2, 2, F(3))


def test_key_identity_examples():
    x = F(5, 4)
    assert identity_sum_lhs(1, x) == F(-1, 10) == identity_sum_rhs(1, x)
    assert identity_sum_lhs(2, x) == F(-9, 34) == identity_sum_rhs(2, x)


@pytest.mark.parametrize("x", [F(5, 4), F(5, 3), F(13, 6)])
def test_key_identity_exact(x):
    for n in range(1, 11):
        assert identity_sum_lhs(n, x) == (1 - cheb_T(n, x)) / (2 * cheb_T(n, x))


def test_key_identity_degenerate_at_one():
    with pytest.raises(DegenerateParameterError):
        identity_sum_lhs(3, F(1))


def test_key_identity_float():
    for k in range(1, 37):
        x = math.cos(math.pi * k / 37)
        for n in range(1, 11):
            assert abs(identity_sum_lhs(n, x) - identity_sum_rhs(n, x)) < 1e-12


def test_key_identity_float_matches_exact_at_same_point():
    # a binary64 input is a rational; the float path rounds the exact value once
    x = math.cos(math.pi * 36 / 37)
    for n in (9, 10):
        assert identity_sum_lhs(n, x) == float(identity_sum_lhs(n, F(x)))


def test_key_identity_float_near_resonance_raises():
    with pytest.raises(DegenerateParameterError):
        identity_sum_lhs(4, math.cos(math.pi / 8))


def test_recip_T_via_phi_values():
    t = F(2)
    assert recip_T_via_phi(0, t) == 1
    assert recip_T_via_phi(1, t) == F(4, 5)
    assert recip_T_via_phi(2, t) == F(8, 17)
    assert recip_T_via_phi(2, t) == phi32_bruteforce(t**-4, t**4, t, -t, -t * t, t * t, t * t, 2)


@pytest.mark.parametrize("t", T_SET)
def test_reciprocal_identity(t):
    for n in range(11):
        phi = recip_T_via_phi(n, t)
        assert phi == 2 * t**n / (1 + t ** (2 * n))
        assert phi * cheb_T(n, (t + 1 / t) / 2) == 1


def test_lemma_sum_examples():
    assert lemma_sum_lhs(1, F(2)) == F(-1, 5)
    t = F(3, 2)
    assert lemma_sum_lhs(2, t) == 2 * t**2 / (1 + t**4) - 1
    assert lemma_sum_lhs(3, F(2)) == F(-49, 65)


@pytest.mark.parametrize("t", T_SET)
def test_lemma_sum_matches_series(t):
    for n in range(1, 9):
        assert lemma_sum_lhs(n, t) == recip_T_via_phi(n, t) - 1


@pytest.mark.parametrize("t", [F(0), F(1), F(-1)])
def test_lemma_sum_domain(t):
    with pytest.raises(DomainError):
        lemma_sum_lhs(2, t)


def test_key_identity_float_outside_unit_interval():
    # the sum cancels from about T_n^{2n} down to O(1)
    for t in (2.0, 5.0, 7 / 3):
        x = (t + 1 / t) / 2
        for n in range(1, 11):
            assert abs(identity_sum_lhs(n, x) - float(identity_sum_lhs(n, F(x)))) <= 1e-15


def test_lemma_sum_float_small_t_is_not_degenerate():
    # the denominators underflow any absolute tolerance without vanishing
    for n in range(1, 7):
        assert abs(lemma_sum_lhs(n, 0.5) - float(lemma_sum_lhs(n, F(1, 2)))) < 1e-6
