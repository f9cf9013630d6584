from fractions import Fraction as F

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import Z, laurent_to_sympy, sympy_to_laurent
from expsubdiv.errors import DomainError
from expsubdiv.laurent import LaurentPoly, lp_prod, lp_sum

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=12)


@st.composite
def laurent_polys(draw, max_len=6):
    lo = draw(st.integers(-4, 4))
    coeffs = draw(st.lists(small_fracs, min_size=0, max_size=max_len))
    return LaurentPoly(lo, coeffs)


nonzero_points = st.fractions(min_value=-3, max_value=3, max_denominator=7).filter(lambda z: z != 0)


def test_trimming_and_structure():
    p = LaurentPoly(-2, [F(0), F(1), F(0), F(3), F(0)])
    assert (p.lo, p.hi) == (-1, 1)
    assert p.coeff(-1) == 1 and p.coeff(1) == 3 and p.coeff(5) == 0
    assert LaurentPoly(3, [0, 0]).is_zero()
    assert LaurentPoly.zero() == LaurentPoly(7, [])


def test_sympy_expansion_product():
    p = LaurentPoly(-1, [F(1), F(2)])  # 1/z + 2
    q = LaurentPoly(-2, [F(1, 2), F(0), F(-3)])  # z^-2/2 - 3
    expected = sympy_to_laurent(sp.expand((1 / Z + 2) * (Z**-2 / 2 - 3)))
    assert p * q == expected


def test_evaluation_rejects_zero():
    with pytest.raises(DomainError):
        LaurentPoly(-1, [F(1)])(0)
    with pytest.raises(DomainError):
        LaurentPoly(0, [F(4), F(1)])(0)


def test_complex_evaluation():
    p = LaurentPoly(-1, [1.0, 0.0, 1.0])  # z + 1/z
    assert abs(p(1j)) < 1e-15
    assert abs(p(complex(0.6, 0.8)) - 1.2) < 1e-15


def test_reflect_and_invert():
    p = LaurentPoly(-1, [F(1), F(2), F(3)])
    assert p.reflect().terms() == {-1: -1, 0: 2, 1: -3}
    assert p.invert().terms() == {-1: 3, 0: 2, 1: 1}
    assert not p.is_symmetric()
    assert LaurentPoly(-1, [F(5), F(2), F(5)]).is_symmetric()


def test_float_equality_tolerance():
    a = LaurentPoly(0, [1.0, 2.0])
    assert a == LaurentPoly(0, [1.0 + 1e-14, 2.0])
    assert a != LaurentPoly(0, [1.0 + 1e-9, 2.0])


def test_json_round_trip_exact_and_float():
    p = LaurentPoly(-2, [F(-1, 16), F(0), F(9, 16)])
    obj = p.to_json_obj()
    assert obj == {"lo": -2, "coeffs": ["-1/16", "0", "9/16"]}
    assert LaurentPoly.from_json(p.to_json()) == p
    f = LaurentPoly(1, [0.25, -1.5])
    back = LaurentPoly.from_json(f.to_json())
    assert back.coeffs == f.coeffs and back.lo == 1


def test_sum_and_prod_helpers():
    ps = [LaurentPoly(-1, [F(1), F(1)]), LaurentPoly(0, [F(1), F(1)])]
    assert lp_sum(ps) == LaurentPoly(-1, [F(1), F(2), F(1)])
    assert lp_prod(ps) == sympy_to_laurent((1 / Z + 1) * (1 + Z))
    assert lp_prod([]) == LaurentPoly.constant(F(1))


def test_pow_matches_sympy():
    p = LaurentPoly(-1, [F(1, 2), F(0), F(1, 2)])
    assert p**5 == sympy_to_laurent(sp.expand(((1 / Z + Z) / 2) ** 5))
    assert p**0 == LaurentPoly.constant(F(1))


@given(laurent_polys(), laurent_polys())
def test_mul_commutative(p, q):
    assert p * q == q * p


@given(laurent_polys(), laurent_polys(), laurent_polys())
@settings(max_examples=60)
def test_mul_associative_and_distributive(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(laurent_polys(), laurent_polys())
def test_mul_matches_sympy(p, q):
    assert p * q == sympy_to_laurent(sp.expand(laurent_to_sympy(p) * laurent_to_sympy(q)))


@given(laurent_polys(), laurent_polys(), nonzero_points)
def test_eval_is_a_ring_homomorphism(p, q, z):
    assert (p * q)(z) == p(z) * q(z)
    assert (p + q)(z) == p(z) + q(z)


@given(laurent_polys(), laurent_polys())
def test_product_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(laurent_polys())
def test_derivative_matches_sympy(p):
    expected = sp.diff(laurent_to_sympy(p), Z)
    assert p.derivative() == (sympy_to_laurent(expected) if expected != 0 else LaurentPoly.zero())


@given(laurent_polys())
def test_reflect_and_invert_are_involutions(p):
    assert p.reflect().reflect() == p
    assert p.invert().invert() == p


@given(laurent_polys(), nonzero_points)
def test_reflect_evaluates_at_minus_z(p, z):
    assert p.reflect()(z) == p(-z)
    assert p.invert()(z) == p(1 / z)


@given(laurent_polys())
def test_symmetrized_is_symmetric(p):
    assert (p + p.invert()).is_symmetric()


@given(laurent_polys())
def test_json_round_trip(p):
    assert LaurentPoly.from_json(p.to_json()) == p


@given(laurent_polys(), st.integers(-5, 5))
def test_shift_is_monomial_product(p, k):
    assert p.shift(k) == p * LaurentPoly.monomial(k, F(1))
