from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bspline_n3_printed
from expsubdiv.errors import SingularMatrixError
from expsubdiv.laurent import LaurentPoly
from expsubdiv.oracle import build_hurwitz, gauss_solve, hurwitz_matrix, oracle_symbol, solve_ell
from expsubdiv.symbols import closed_form_symbol, dd_symbol


def test_hurwitz_n3_layout():
    v = F(5, 4)
    system = build_hurwitz(3, v)
    s = bspline_n3_printed(v)
    assert list(system.s_coeffs) == s
    assert list(system.matrix[0]) == [s[1], s[3], s[5], s[7], 0, 0, 0]
    assert list(system.matrix[1]) == [s[0], s[2], s[4], s[6], s[8], 0, 0]
    for r in range(1, 8):
        for c in range(1, 8):
            m = 2 * c - r
            assert system.entry(r, c) == (s[m] if 0 <= m <= 8 else 0)


def test_hurwitz_n1_layout():
    s = [F(k) for k in range(1, 6)]
    assert hurwitz_matrix(s, 1) == [[s[1], s[3], 0], [s[0], s[2], s[4]], [0, s[1], s[3]]]


@pytest.mark.parametrize("n", range(1, 6))
def test_s_coeffs_palindromic(n):
    s = build_hurwitz(n, F(7, 10)).s_coeffs
    assert list(s) == list(reversed(s))


def test_build_hurwitz_rejects_n0():
    with pytest.raises(ValueError):
        build_hurwitz(0, F(2))


def test_gauss_solve_exact_and_float():
    A = [[F(2), F(1), F(-1)], [F(-3), F(-1), F(2)], [F(-2), F(1), F(2)]]
    b = [F(8), F(-11), F(-3)]
    assert gauss_solve(A, b) == [2, 3, -1]
    x = gauss_solve([[float(a) for a in row] for row in A], [float(v) for v in b])
    assert max(abs(a - e) for a, e in zip(x, (2, 3, -1))) < 1e-14


def test_gauss_solve_pivots():
    # a zero leading entry needs a row swap
    assert gauss_solve([[F(0), F(1)], [F(1), F(0)]], [F(3), F(4)]) == [4, 3]


def test_gauss_solve_singular():
    with pytest.raises(SingularMatrixError):
        gauss_solve([[F(1), F(2)], [F(2), F(4)]], [F(1), F(1)])
    with pytest.raises(SingularMatrixError):
        gauss_solve([[1.0, 2.0], [2.0, 4.0 + 1e-15]], [1.0, 1.0])
    with pytest.raises(SingularMatrixError):
        gauss_solve([[F(0)]], [F(1)])


def test_ell_solves_unit_row():
    system = build_hurwitz(2, F(5, 4))
    ell = solve_ell(system)
    y = [ell.coeff(j) for j in range(-2, 3)]
    size = 5
    for k in range(size):
        col = sum(system.matrix[r][k] * y[r] for r in range(size))
        assert col == (1 if k == 2 else 0)
    assert ell.is_symmetric()


def test_dd_case():
    # v = 1: the B-spline symbol is polynomial and l turns it into DD4
    assert oracle_symbol(1, F(1)).symbol == dd_symbol(1).symbol
    system = build_hurwitz(1, F(1))
    assert build_hurwitz(1, F(1)).s_coeffs[0] == F(1, 8)
    assert solve_ell(system) == LaurentPoly(-1, [F(-1, 2), F(2), F(-1, 2)])


@pytest.mark.parametrize("n", range(1, 5))
def test_oracle_matches_closed_form_at_five_quarters(n):
    v = F(5, 4)
    assert oracle_symbol(n, v).symbol == closed_form_symbol(n, v).symbol


@pytest.mark.parametrize("n", range(1, 5))
def test_oracle_interpolation_structure(n):
    m = oracle_symbol(n, F(3, 5)).symbol
    assert m.coeff(0) == 1
    assert all(m.coeff(e) == 0 for e in range(-2 * n, 2 * n + 1, 2) if e)
    assert m.is_symmetric()


v_samples = st.fractions(min_value=F(8, 25), max_value=2, max_denominator=40).filter(
    lambda v: v not in (1, F(1, 2))
)


@given(st.integers(1, 4), v_samples)
@settings(max_examples=40, deadline=None)
def test_oracle_equals_closed_form_property(n, v):
    try:
        closed = closed_form_symbol(n, v).symbol
    except ArithmeticError:
        return  # resonant v, no closed form to compare against
    assert oracle_symbol(n, v).symbol == closed


@pytest.mark.parametrize("v", [F(2, 5), F(4, 5), F(6, 5), F(9, 5)])
def test_float_pipeline_tracks_rational(v):
    for n in range(1, 7):
        exact = oracle_symbol(n, v).symbol
        approx = oracle_symbol(n, float(v)).symbol
        assert approx.max_abs_diff(exact) <= 1e-9
