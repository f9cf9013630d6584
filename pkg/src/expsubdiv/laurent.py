"""Laurent polynomials with dense coefficient storage.

A :class:`LaurentPoly` stores the lowest exponent ``lo`` and the dense tuple
``coeffs`` where ``coeffs[i]`` multiplies ``z**(lo + i)``. Leading and
trailing zeros are trimmed on construction, so two polynomials over the
rationals are equal exactly when their fields are.

>>> p = LaurentPoly(-1, (1, 2, 1))
>>> p * p
LaurentPoly(lo=-2, coeffs=(1, 4, 6, 4, 1))
>>> p(2)
Fraction(9, 2)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .scalar import coerce, format_scalar, is_exact, load_scalar, scalars_equal


def _is_structural_zero(c) -> bool:
    return c == 0


@dataclass(frozen=True, eq=False)
class LaurentPoly:
    lo: int
    coeffs: tuple

    def __init__(self, lo: int, coeffs: Sequence):
        left, right = 0, len(coeffs)
        while left < right and _is_structural_zero(coeffs[left]):
            left += 1
        while right > left and _is_structural_zero(coeffs[right - 1]):
            right -= 1
        if left == right:
            object.__setattr__(self, "lo", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "lo", int(lo) + left)
            object.__setattr__(self, "coeffs", tuple(coeffs[left:right]))

    # construction helpers

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls(0, ())

    @classmethod
    def constant(cls, c) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def monomial(cls, exponent: int, c=1) -> LaurentPoly:
        return cls(exponent, (c,))

    @classmethod
    def from_dict(cls, terms: Mapping[int, object]) -> LaurentPoly:
        """Build from ``{exponent: coefficient}``; missing exponents are zero."""
        if not terms:
            return cls.zero()
        lo, hi = min(terms), max(terms)
        zero = 0 * next(iter(terms.values()))
        return cls(lo, [terms.get(j, zero) for j in range(lo, hi + 1)])

    # structure

    @property
    def hi(self) -> int:
        """Highest exponent (``lo - 1`` for the zero polynomial)."""
        return self.lo + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int):
        k = j - self.lo
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def terms(self) -> dict:
        return {self.lo + i: c for i, c in enumerate(self.coeffs)}

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs)

    # arithmetic

    def _combine(self, other: LaurentPoly, sign: int) -> LaurentPoly:
        if self.is_zero():
            return other if sign > 0 else -other
        if other.is_zero():
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = []
        for j in range(lo, hi + 1):
            a, b = self.coeff(j), other.coeff(j)
            out.append(a + b if sign > 0 else a - b)
        return LaurentPoly(lo, out)

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        return self._combine(other, +1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        return self._combine(other, -1)

    def __rsub__(self, other):
        return LaurentPoly.constant(other) - self

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.lo, [-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentPoly(self.lo + other.lo, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> LaurentPoly:
        return LaurentPoly(self.lo, [c * a for a in self.coeffs])

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``z**k``."""
        return LaurentPoly(self.lo + k, self.coeffs)

    # calculus and symmetry

    def __call__(self, z):
        """Evaluate at ``z != 0`` (Horner on ``z**-lo * p``, then rescale)."""
        if z == 0:
            raise DomainError("Laurent polynomial evaluated at z = 0")
        z = coerce(z)
        if self.is_zero():
            return 0 * z
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        if self.lo >= 0:
            return acc * z**self.lo
        return acc / z ** (-self.lo)

    def derivative(self) -> LaurentPoly:
        return LaurentPoly(
            self.lo - 1, [(self.lo + i) * c for i, c in enumerate(self.coeffs)]
        )

    def reflect(self) -> LaurentPoly:
        """The polynomial ``p(-z)``."""
        return LaurentPoly(
            self.lo,
            [c if (self.lo + i) % 2 == 0 else -c for i, c in enumerate(self.coeffs)],
        )

    def invert(self) -> LaurentPoly:
        """The polynomial ``p(1/z)``."""
        return LaurentPoly(-self.hi, self.coeffs[::-1])

    def is_symmetric(self, atol: float | None = None) -> bool:
        """True iff ``coeff(j) == coeff(-j)`` for every ``j``."""
        span = max(abs(self.lo), abs(self.hi)) if self.coeffs else 0
        for j in range(1, span + 1):
            if not self._close(self.coeff(j), self.coeff(-j), atol):
                return False
        return True

    # comparison

    @staticmethod
    def _close(a, b, atol):
        if atol is None:
            return scalars_equal(a, b)
        return abs(a - b) <= atol

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, float)) or is_exact(other):
                other = LaurentPoly.constant(other)
            else:
                return NotImplemented
        if self.is_exact() and other.is_exact():
            return self.lo == other.lo and self.coeffs == other.coeffs
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return all(
            scalars_equal(self.coeff(j), other.coeff(j)) for j in range(lo, hi + 1)
        )

    __hash__ = None

    def max_abs_diff(self, other: LaurentPoly) -> float:
        """Infinity norm of the coefficient difference, as a float."""
        diff = self - other
        return max((abs(float(c)) for c in diff.coeffs), default=0.0)

    def to_float(self) -> LaurentPoly:
        return LaurentPoly(self.lo, [float(c) for c in self.coeffs])

    # serialization

    def to_json_obj(self) -> dict:
        return {"lo": self.lo, "coeffs": [format_scalar(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> LaurentPoly:
        return cls(int(obj["lo"]), [load_scalar(c) for c in obj["coeffs"]])

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        return cls.from_json_obj(json.loads(text))

    def __repr__(self) -> str:
        return f"LaurentPoly(lo={self.lo}, coeffs={self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in self.terms().items():
            if c == 0:
                continue
            parts.append(f"({c})" if j == 0 else f"({c})*z^{j}")
        return " + ".join(parts)


def lp_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    total = LaurentPoly.zero()
    for p in polys:
        total = total + p
    return total


def lp_prod(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    total = LaurentPoly.constant(1)
    for p in polys:
        total = total * p
    return total
