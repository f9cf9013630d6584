"""The scalar contract: exact rationals (``Fraction``) or binary64 floats.

All numeric code in the package is written once, against field operations
only, and runs unchanged on either realization. Complex numbers appear only
as evaluation points.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Number
from typing import Union

Scalar = Union[Fraction, int, float]

ATOL = 1e-12
RTOL = 1e-12
# magnitude below which a float denominator is treated as zero
ZERO_TOL = 1e-12


def is_exact(x) -> bool:
    return isinstance(x, (Fraction, int)) and not isinstance(x, bool)


def coerce(x):
    """Promote plain ints to ``Fraction`` so exact inputs stay exact."""
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return x


def is_zero(x, tol: float = ZERO_TOL) -> bool:
    """Exact test for rationals, ``|x| < tol`` otherwise."""
    if is_exact(x):
        return x == 0
    return abs(x) < tol


def scalars_equal(a, b, atol: float = ATOL, rtol: float = RTOL) -> bool:
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(a - b) <= atol + rtol * max(abs(a), abs(b))


def parse_scalar(text: str, exact: bool = True) -> Scalar:
    """Parse ``"p/q"``, an integer or a decimal string.

    With ``exact=True`` the result is a ``Fraction`` (decimals are converted
    exactly); otherwise a float.
    """
    text = text.strip()
    if exact:
        return Fraction(text)
    if "/" in text:
        return float(Fraction(text))
    return float(text)


def format_scalar(x) -> str | float:
    """JSON-friendly form: rationals as ``"p/q"`` strings, floats unchanged."""
    if is_exact(x):
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, complex):
        raise TypeError("complex values are not serialized")
    return float(x)


def load_scalar(obj) -> Scalar:
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, bool) or not isinstance(obj, Number):
        raise TypeError(f"cannot read scalar from {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    return float(obj)


def to_float(x) -> float:
    return float(x)


def exact_sqrt(x: Fraction) -> Fraction | None:
    """Square root of a non-negative rational if it is rational, else None."""
    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None
