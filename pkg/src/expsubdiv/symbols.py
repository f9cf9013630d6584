"""Level symbols of exponential B-spline and interpolatory subdivision schemes.

All builders are parameterized by the reduced level parameter
``v = cos(theta / 2**(k+1))`` (``cosh`` for hyperbolic frequencies). Every
formula is rational in ``v``, so a rational ``v`` such as 5/4 yields exact
symbols; :func:`level_param` converts a frequency and a level into ``v``.

At ``v = 1`` the coupling coefficients are 0/0 and the interpolatory symbol
is replaced by its limit, the Dubuc-Deslauriers symbol (:func:`dd_symbol`).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Literal

from .chebyshev import cheb_T_values
from .errors import DegenerateLevelError
from .laurent import LaurentPoly
from .scalar import coerce, exact_sqrt, is_exact, is_zero

# float denominators below this (but above the zero threshold) trigger a warning
ILL_CONDITIONED_TOL = 1e-8

ThetaKind = Literal["zero", "trigonometric", "hyperbolic"]


@dataclass(frozen=True)
class ThetaSpec:
    """Frequency of the reproduced exponentials.

    ``value`` is ``omega`` for trigonometric frequencies (``theta = omega``)
    and ``s`` for hyperbolic ones (``theta = i s``); it is ignored for
    ``kind="zero"``.
    """

    kind: ThetaKind = "zero"
    value: float = 0.0

    def __post_init__(self):
        if self.kind not in ("zero", "trigonometric", "hyperbolic"):
            raise ValueError(f"unknown theta kind {self.kind!r}")
        if self.kind != "zero" and not self.value > 0:
            raise ValueError("theta value must be positive")

    @classmethod
    def zero(cls) -> ThetaSpec:
        return cls("zero", 0.0)

    @classmethod
    def trigonometric(cls, omega: float) -> ThetaSpec:
        return cls("trigonometric", float(omega))

    @classmethod
    def hyperbolic(cls, s: float) -> ThetaSpec:
        return cls("hyperbolic", float(s))


@dataclass(frozen=True)
class LevelParam:
    v: object
    k: int = 0


def level_param(theta: ThetaSpec, k: int) -> LevelParam:
    """``v_k = cos(theta / 2^(k+1))``; hyperbolic frequencies use ``cosh``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if theta.kind == "zero":
        return LevelParam(Fraction(1), k)
    angle = theta.value / 2 ** (k + 1)
    if theta.kind == "trigonometric":
        return LevelParam(math.cos(angle), k)
    return LevelParam(math.cosh(angle), k)


@dataclass(frozen=True)
class SubdivisionMask:
    """An interpolatory, odd-symmetric level symbol."""

    symbol: LaurentPoly
    n: int
    level_param: LevelParam = field(default_factory=lambda: LevelParam(Fraction(1)))

    @property
    def v(self):
        return self.level_param.v

    def coefficients(self) -> dict:
        return self.symbol.terms()

    def to_json_obj(self) -> dict:
        from .scalar import format_scalar

        obj = {"n": self.n, "v": format_scalar(self.v)}
        obj.update(self.symbol.to_json_obj())
        return obj


def _T_table(n: int, v) -> list:
    return cheb_T_values(n + 1, coerce(v))


def _check_denominator(value, what: str, index: str):
    if is_zero(value):
        raise DegenerateLevelError(f"{what} vanishes at {index}", index=index)
    if not is_exact(value) and abs(value) < ILL_CONDITIONED_TOL:
        warnings.warn(
            f"{what} is {value:.3e} at {index}; the symbol is ill-conditioned",
            RuntimeWarning,
            stacklevel=3,
        )


def _a_factor_from_T(Tl, ell: int) -> LaurentPoly:
    _check_denominator(Tl + 1, "T_l(v) + 1", f"l={ell}")
    w = 1 / (2 * (Tl + 1))
    return LaurentPoly(-1, (w, Tl / (Tl + 1), w))


def a_factor(ell: int, v) -> LaurentPoly:
    """``(z + 2 T_l(v) + 1/z) / (2 (T_l(v) + 1))``."""
    return _a_factor_from_T(_T_table(ell, v)[ell], ell)


def bspline_symbol(n: int, v) -> LaurentPoly:
    """Exponential B-spline symbol ``2 prod_{l=0}^{n} a_l(z)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    T = _T_table(n, v)
    out = LaurentPoly.constant(coerce(2))
    for ell in range(n + 1):
        out = out * _a_factor_from_T(T[ell], ell)
    return out


def _c_weights(n: int, T: list) -> list:
    """``[c_1, ..., c_n]`` from a table holding ``T_0 .. T_{n+1}``."""
    weights = []
    diffs = [T[m] - T[m + 1] for m in range(n + 1)]
    for i in range(1, n + 1):
        _check_denominator(T[i] + 1, "T_i(v) + 1", f"i={i}")
        c = coerce(2) ** i / (T[i] + 1)
        for ell in range(i):
            den = diffs[i] - diffs[ell]
            _check_denominator(den, f"denominator of C_{{{ell},{i}}}", f"i={i}")
            c = c * diffs[ell] * (T[ell] + 1) / den
        weights.append(c)
    return weights


def c_weight(i: int, v):
    """``c_i(v) = 2^i / (T_i(v) + 1) * prod_{l<i} C_{l,i}(v)``."""
    if i < 1:
        raise ValueError("i must be positive")
    return _c_weights(i, _T_table(i, v))[i - 1]


def _half_band(a0: LaurentPoly) -> LaurentPoly:
    # 2 a_0(z) - 1 = (1 + z^2) / (2z)
    return a0 * 2 - 1


def b_poly(i: int, v) -> LaurentPoly:
    """``b_i(z) = (2 a_0(z) - 1) c_i(v) prod_{l<i} a_l(-z)``."""
    if i < 1:
        raise ValueError("i must be positive")
    T = _T_table(i, v)
    factors = [_a_factor_from_T(T[ell], ell) for ell in range(i)]
    c = _c_weights(i, T)[i - 1]
    out = _half_band(factors[0]) * c
    for a in factors:
        out = out * a.reflect()
    return out


def b_poly_limit(i: int) -> LaurentPoly:
    """Limit of ``b_i`` as ``v -> 1``.

    ``(-1)^i 2^(-2i-1) binom(2i-1, i-1) (1 + z^2)(1 - z)^(2i) / z^(i+1)``.
    """
    if i < 1:
        raise ValueError("i must be positive")
    scale = Fraction((-1) ** i * comb(2 * i - 1, i - 1), 2 ** (2 * i + 1))
    one_minus_z = LaurentPoly(0, (Fraction(1), Fraction(-1)))
    body = LaurentPoly(0, (Fraction(1), 0, Fraction(1))) * one_minus_z ** (2 * i)
    return body.shift(-(i + 1)) * scale


def _reject_unit_v(v):
    if v == 1:
        raise DegenerateLevelError(
            "v = 1 makes every C_{l,i} 0/0; use dd_symbol", index="i=1"
        )


def closed_form_symbol(n: int, v) -> SubdivisionMask:
    """The interpolatory symbol reproducing ``{1, x, exp(+-i j theta x)}_{j<=n}``.

    Evaluated in the nested form
    ``2 a_0(z) (1 + sum_{i=1}^n b_i(z) prod_{l=1}^{i-1} a_l(z))``, with the
    running product carried across ``i``. ``n = 0`` gives ``2 a_0``.

    >>> closed_form_symbol(1, Fraction(5, 4)).symbol.coeff(3)
    Fraction(-2, 45)
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    v = coerce(v)
    T = _T_table(n, v)
    a = [_a_factor_from_T(T[ell], ell) for ell in range(n + 1)]
    if n == 0:
        return SubdivisionMask(a[0] * 2, 0, LevelParam(v))
    _reject_unit_v(v)
    c = _c_weights(n, T)
    half = _half_band(a[0])

    inner = LaurentPoly.constant(coerce(1))
    reflected = LaurentPoly.constant(coerce(1))  # prod_{l<i} a_l(-z)
    plain = LaurentPoly.constant(coerce(1))  # prod_{1<=l<i} a_l(z)
    for i in range(1, n + 1):
        reflected = reflected * a[i - 1].reflect()
        if i > 1:
            plain = plain * a[i - 1]
        b_i = half * reflected * c[i - 1]
        inner = inner + b_i * plain
    return SubdivisionMask(a[0] * 2 * inner, n, LevelParam(v))


def closed_form_symbol_flat(n: int, v) -> SubdivisionMask:
    """Same symbol in the expanded form
    ``2 a_0 + 2 (2 a_0 - 1) sum_i c_i prod_{l<i} a_l(-z) a_l(z)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    v = coerce(v)
    T = _T_table(n, v)
    a = [_a_factor_from_T(T[ell], ell) for ell in range(n + 1)]
    if n == 0:
        return SubdivisionMask(a[0] * 2, 0, LevelParam(v))
    _reject_unit_v(v)
    c = _c_weights(n, T)
    acc = LaurentPoly.zero()
    prod = LaurentPoly.constant(coerce(1))
    for i in range(1, n + 1):
        prod = prod * a[i - 1] * a[i - 1].reflect()
        acc = acc + prod * c[i - 1]
    symbol = a[0] * 2 + _half_band(a[0]) * acc * 2
    return SubdivisionMask(symbol, n, LevelParam(v))


def dd_symbol(n: int) -> SubdivisionMask:
    """The (2n+2)-point Dubuc-Deslauriers symbol, in exact rationals.

    ``(1+z)^(2n+2) / (2^(2n+1) z^(n+1)) sum_{s=0}^n binom(n+s, s) (-1)^s
    (1-z)^(2s) / (4^s z^s)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    one = Fraction(1)
    one_plus = LaurentPoly(0, (one, one))
    one_minus_sq = LaurentPoly(0, (one, -one)) ** 2
    series = LaurentPoly.zero()
    power = LaurentPoly.constant(one)
    for s in range(n + 1):
        coef = Fraction((-1) ** s * comb(n + s, s), 4**s)
        series = series + power.shift(-s) * coef
        power = power * one_minus_sq
    prefactor = (one_plus ** (2 * n + 2)).shift(-(n + 1)) * Fraction(1, 2 ** (2 * n + 1))
    return SubdivisionMask(prefactor * series, n, LevelParam(Fraction(1)))


def interpolatory_symbol(n: int, v) -> SubdivisionMask:
    """:func:`closed_form_symbol`, falling back to :func:`dd_symbol` at ``v = 1``."""
    if n >= 1 and coerce(v) == 1:
        return dd_symbol(n)
    return closed_form_symbol(n, v)


# condition checks


def root_point(v):
    """A point ``r`` with ``(r + 1/r)/2 = v``.

    Unit-modulus complex for ``|v| <= 1`` and real ``r >= 1`` for ``v > 1``;
    kept rational when ``sqrt(v^2 - 1)`` is rational.
    """
    v = coerce(v)
    if is_exact(v):
        disc = v * v - 1
        if disc >= 0:
            root = exact_sqrt(disc)
            if root is not None:
                return v + root
    vf = float(v)
    if abs(vf) <= 1:
        return complex(vf, math.sqrt(1 - vf * vf))
    if vf > 1:
        return vf + math.sqrt(vf * vf - 1)
    return vf - math.sqrt(vf * vf - 1)


@dataclass
class ConditionReport:
    """Residuals of the generation / reproduction / interpolation conditions.

    Each residual is ``value - target``; exact where arithmetic allowed.
    """

    mode: str
    residuals: dict = field(default_factory=dict)

    def max_abs(self) -> float:
        return max((abs(complex(r)) for r in self.residuals.values()), default=0.0)

    def passed(self, tol: float = 1e-10) -> bool:
        return self.max_abs() <= tol


def verify_conditions(mask: SubdivisionMask, mode: str) -> ConditionReport:
    """Evaluate the symbol conditions characterizing the scheme.

    ``generation``: ``m(-1)``, ``m'(-1)`` and ``m(-r^{+-j})`` for ``j=1..n``.
    ``reproduction``: ``m(1) - 2``, ``m'(1)`` and ``m(r^{+-j}) - 2``.
    ``interpolation``: the largest coefficient of ``m(z) + m(-z) - 2``.
    """
    m = mask.symbol
    report = ConditionReport(mode)
    if mode == "interpolation":
        excess = m + m.reflect() - 2
        report.residuals["m(z)+m(-z)-2"] = max(
            (abs(c) for c in excess.coeffs), default=coerce(0)
        )
        return report
    if mode not in ("generation", "reproduction"):
        raise ValueError(f"unknown mode {mode!r}")

    sign = -1 if mode == "generation" else 1
    target = 0 if mode == "generation" else 2
    dm = m.derivative()
    one = coerce(sign)
    report.residuals[f"m({sign})"] = m(one) - target
    report.residuals[f"m'({sign})"] = dm(one)

    r = root_point(mask.v)
    for j in range(1, mask.n + 1):
        for e in (j, -j):
            z = sign * r**e
            report.residuals[f"m({'-' if sign < 0 else ''}r^{e})"] = m(z) - target
    return report
