"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of a formula (e.g. z = 0)."""


class SingularParameterError(ArithmeticError):
    """A Pochhammer or q-Pochhammer denominator vanished before termination."""


class NonTerminatingSeriesError(ValueError):
    """A basic hypergeometric series has no q^(-n) numerator parameter."""


class DegenerateParameterError(ArithmeticError):
    """A denominator of a Chebyshev-based formula vanished."""


class DegenerateLevelError(DegenerateParameterError):
    """A level parameter makes one of the symbol denominators vanish.

    ``index`` names the offending factor (``"l=3"``, ``"i=4"``, ...) and
    ``level`` is the refinement level when known.
    """

    def __init__(self, message: str, index: str | None = None, level: int | None = None):
        super().__init__(message)
        self.index = index
        self.level = level


class SingularMatrixError(ArithmeticError):
    """Elimination hit a zero (or numerically negligible) pivot."""


class UnsupportedBoundaryError(ValueError):
    """Refinement of open polygons is not supported."""
