"""Chebyshev polynomials of the first kind and the identities built on them.

Everything is evaluated by recurrence or finite sums, so rational inputs give
exact rational outputs and ``|x| > 1`` needs no special treatment. With the
substitution ``x = (t + 1/t)/2`` one has ``T_n(x) = (t^n + t^-n)/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext

from .errors import DegenerateParameterError, DomainError
from .qseries import three_phi_two
from .scalar import coerce, is_zero, scalars_equal


@dataclass(frozen=True)
class ChebPoint:
    """An argument ``x``, optionally tied to ``t`` through ``x = (t + 1/t)/2``."""

    x: object
    t: object = None

    @classmethod
    def from_t(cls, t) -> ChebPoint:
        t = coerce(t)
        if t == 0:
            raise DomainError("t must be nonzero")
        return cls((t + 1 / t) / 2, t)

    def __post_init__(self):
        if self.t is not None and not scalars_equal(self.x, (self.t + 1 / self.t) / 2):
            raise ValueError("x does not match (t + 1/t)/2")


def cheb_T(n: int, x):
    """``T_n(x)`` from ``T_0 = 1``, ``T_1 = x``, ``T_{k+1} = 2x T_k - T_{k-1}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return cheb_T_values(n, x)[n]


def cheb_T_values(n_max: int, x) -> list:
    """``[T_0(x), ..., T_{n_max}(x)]``."""
    x = coerce(x)
    values = [coerce(1), x]
    for _ in range(1, n_max):
        values.append(2 * x * values[-1] - values[-2])
    return values[: n_max + 1]


def cheb_T_from_t(n: int, t):
    """``(t^n + t^-n)/2``."""
    t = coerce(t)
    if t == 0:
        raise DomainError("t must be nonzero")
    return (t**n + t ** (-n)) / 2


def _coupling(T: list, ell: int, i: int):
    num = (T[ell] - T[ell + 1]) * (T[ell] + 1)
    den = (T[i] - T[i + 1]) - (T[ell] - T[ell + 1])
    if is_zero(den):
        raise DegenerateParameterError(
            f"C_{{{ell},{i}}} has a vanishing denominator"
        )
    return num / den


def coupling_C(ell: int, i: int, x):
    """The coupling coefficient ``C_{l,i}(x)`` for ``0 <= l < i``.

    ``C_{l,i} = (T_l - T_{l+1})(T_l + 1) / ((T_i - T_{i+1}) - (T_l - T_{l+1}))``.
    At ``x = 1`` every ``T_m`` equals 1 and the quotient is 0/0, which raises
    DegenerateParameterError.
    """
    if not 0 <= ell < i:
        raise ValueError("need 0 <= ell < i")
    return _coupling(cheb_T_values(i + 1, x), ell, i)


# base working precision for float inputs to identity_sum_lhs; for |x| <= 1 the
# terms reach about 1e6 and cancel to O(1), so binary64 alone loses ~7 digits.
# Outside [-1, 1] the products grow like T_n^{2n}, and digits are added for that.
EXTENDED_DIGITS = 50


def identity_sum_lhs(n: int, x):
    """Left side of the Chebyshev key identity.

    ``sum_{i=1}^n 2^i/(T_i+1) prod_{l<i} C_{l,i} (T_l^2 - T_n^2)/(T_l+1)^2``,
    which equals ``(1 - T_n)/(2 T_n)``. Products are accumulated per ``i``,
    so the cost is O(n^2) scalar operations.

    Float arguments are converted exactly to ``Decimal`` and summed with at
    least ``EXTENDED_DIGITS`` significant digits, then rounded once; rationals
    stay exact.
    """
    if n < 1:
        raise ValueError("n must be positive")
    x = coerce(x)
    if isinstance(x, float):
        growth = n * math.log10(2 * abs(x)) if abs(x) > 1 else 0.0
        with localcontext() as ctx:
            ctx.prec = EXTENDED_DIGITS + math.ceil(2 * n * growth)
            xd = Decimal(x)
            T = [Decimal(1), xd]
            for _ in range(n):
                T.append(2 * xd * T[-1] - T[-2])
            return float(_key_sum(T, n, Decimal(2)))
    return _key_sum(cheb_T_values(n + 1, x), n, coerce(2))


def _key_sum(T: list, n: int, two):
    Tn2 = T[n] ** 2
    total = 0
    for i in range(1, n + 1):
        if is_zero(T[i] + 1):
            raise DegenerateParameterError(f"T_{i}(x) = -1")
        prod = two**i / (T[i] + 1)
        for ell in range(i):
            if is_zero(T[ell] + 1):
                raise DegenerateParameterError(f"T_{ell}(x) = -1")
            prod = prod * _coupling(T, ell, i) * (T[ell] ** 2 - Tn2) / (T[ell] + 1) ** 2
        total = total + prod
    return total


def identity_sum_rhs(n: int, x):
    Tn = cheb_T(n, x)
    if is_zero(Tn):
        raise DegenerateParameterError(f"T_{n}(x) = 0")
    return (1 - Tn) / (2 * Tn)


def lemma_sum_lhs(n: int, t):
    """The alternating t-sum that equals the Prop.-1 ``3phi2`` minus one.

    ``(t^{2n}-1)^2 sum_{i=1}^n (-1)^i N_i / D_i`` with
    ``N_i = prod_{l=1}^{i}(t^{2l-1}-1) prod_{l=1}^{i-1}(t^{2(n+l)}-1)(t^{2(n-l)}-1)``
    and ``D_i = t^{(2n-i)i-i} prod_{l=1}^{i}(t^{2l}-1) prod_{l=1}^{2i}(t^l+1)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    t = coerce(t)
    if t == 0 or t == 1 or t == -1:
        raise DomainError("t must avoid 0 and +-1")
    total = 0
    for i in range(1, n + 1):
        num = 1
        for ell in range(1, i + 1):
            num *= t ** (2 * ell - 1) - 1
        for ell in range(1, i):
            num *= (t ** (2 * (n + ell)) - 1) * (t ** (2 * (n - ell)) - 1)
        den = t ** ((2 * n - i) * i - i)
        for ell in range(1, i + 1):
            den *= t ** (2 * ell) - 1
        for ell in range(1, 2 * i + 1):
            den *= t**ell + 1
        # for real t outside {0, +-1} no factor of den vanishes; the product
        # itself can be far below any absolute tolerance when |t| < 1
        total += (-1) ** i * num / den
    return (t ** (2 * n) - 1) ** 2 * total


def recip_T_via_phi(n: int, t):
    """``3phi2[t^-2n, t^2n, t; -t, -t^2; t^2, t^2]``, equal to ``1/T_n((t+1/t)/2)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    t = coerce(t)
    if t == 0:
        raise DomainError("t must be nonzero")
    q = t * t
    return three_phi_two(t ** (-2 * n), t ** (2 * n), t, -t, -q, q, q, terminate_at=n)
