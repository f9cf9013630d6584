"""Pochhammer symbols and terminating (basic) hypergeometric series.

Only explicitly terminating series are summed. Parameters outside the
analytic region (e.g. ``q > 1``) are allowed because every series here is a
finite sum; the identities are algebraic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import NonTerminatingSeriesError, SingularParameterError
from .scalar import ZERO_TOL, coerce, is_exact, is_zero

# largest termination index scanned for q**-n parameters
N_MAX = 64
# relative tolerance for matching q**-n in floating point
TERMINATION_RTOL = 1e-9


def pochhammer(p, n: int):
    """Rising factorial ``(p)_n = p (p+1) ... (p+n-1)``; ``(p)_0 = 1``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = 1
    for j in range(n):
        out *= p + j
    return out


def q_pochhammer(a, q, n: int):
    """``(a; q)_n = prod_{j<n} (1 - a q^j)``; ``(a; q)_0 = 1``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = 1
    qj = 1
    for _ in range(n):
        out *= 1 - a * qj
        qj *= q
    return out


def gauss_2f1_terminating(m: int, b, c, z):
    """Evaluate the polynomial ``2F1(-m, b; c; z)``.

    Raises SingularParameterError when ``(c)_k`` vanishes for some ``k <= m``.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    total = 1
    ratio = 1  # (b)_k / (c)_k
    zk = 1
    for k in range(1, m + 1):
        denom = c + (k - 1)
        if is_zero(denom):
            raise SingularParameterError(
                f"(c)_{k} vanishes for c = {c} before the series terminates"
            )
        ratio = ratio * (b + (k - 1)) / denom
        zk = zk * z
        total += (-1) ** k * comb(m, k) * ratio * zk
    return total


@dataclass(frozen=True)
class QHyperParams:
    """Parameters of ``r phi s [numerator; denominator; q, z]``."""

    numerator: tuple
    denominator: tuple
    q: object
    z: object
    terminate_at: int | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(self.numerator))
        object.__setattr__(self, "denominator", tuple(self.denominator))
        if is_zero(self.q, 0.0) or self.q == 1:
            raise ValueError("q must differ from 0 and 1")

    def termination_index(self) -> int:
        """Smallest ``n`` with some numerator parameter equal to ``q**-n``."""
        if self.terminate_at is not None:
            return self.terminate_at
        return find_termination_index(self.numerator, self.q)


def _matches(alpha, target) -> bool:
    if is_exact(alpha) and is_exact(target):
        return alpha == target
    return abs(alpha - target) <= TERMINATION_RTOL * max(abs(alpha), abs(target))


def find_termination_index(numerator: Sequence, q, n_max: int = N_MAX) -> int:
    q_inv = 1 / coerce(q)
    power = 1  # q**-n
    for n in range(n_max + 1):
        if any(_matches(alpha, power) for alpha in numerator):
            return n
        power = power * q_inv
    raise NonTerminatingSeriesError(
        f"no numerator parameter equals q^-n for n <= {n_max}"
    )


def rphi_s_terminating(params: QHyperParams):
    """Sum the terminating basic hypergeometric series.

    Term ``k`` is ``prod (alpha;q)_k / prod (beta;q)_k * z^k / (q;q)_k``
    times ``(-q^((k-1)/2))^(k(1+s-r))``; the last factor is 1 when
    ``r = s + 1``. The sum stops at the termination index.

    >>> from fractions import Fraction as F
    >>> t = F(2)
    >>> rphi_s_terminating(QHyperParams((t**-2, t**2, t), (-t, -t**2), t**2, t**2))
    Fraction(4, 5)
    """
    num = tuple(map(coerce, params.numerator))
    den = tuple(map(coerce, params.denominator))
    q, z = coerce(params.q), coerce(params.z)
    n = params.termination_index()
    excess = 1 + len(den) - len(num)

    total = 1
    term = 1
    qk = 1  # q**k at the start of step k -> k+1
    for k in range(n):
        factor = z
        for alpha in num:
            factor = factor * (1 - alpha * qk)
        divisor = 1
        # each factor is tested on its own: near q = 1 the product is
        # legitimately tiny without any single factor vanishing
        for beta in den + (q,):
            step = beta * qk
            one_minus = 1 - step
            if is_zero(one_minus, ZERO_TOL * max(1, abs(step))):
                raise SingularParameterError(
                    f"denominator q-Pochhammer factor vanishes at step {k + 1} "
                    f"(termination index {n})"
                )
            divisor = divisor * one_minus
        term = term * factor / divisor
        if excess:
            # ratio of consecutive correction factors: (-1)^excess * q^(k*excess)
            term = term * (-1) ** excess * qk**excess
        total = total + term
        qk = qk * q
    return total


def three_phi_two(a1, a2, a3, b1, b2, q, z, terminate_at: int | None = None):
    return rphi_s_terminating(QHyperParams((a1, a2, a3), (b1, b2), q, z, terminate_at))


def q_saalschutz_check(n: int, a, b, c, q):
    """Both sides of the q-Saalschuetz (Jackson) summation.

    Returns ``(lhs, rhs)`` with
    ``lhs = 3phi2[q^-n, a, b; c, ab/(c q^(n-1)); q, q]`` and
    ``rhs = (c/a;q)_n (c/b;q)_n / ((c;q)_n (c/(ab);q)_n)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    a, b, c, q = map(coerce, (a, b, c, q))
    q_minus_n = q ** (-n)
    lhs = three_phi_two(q_minus_n, a, b, c, a * b / (c * q ** (n - 1)), q, q, terminate_at=n)
    denom = q_pochhammer(c, q, n) * q_pochhammer(c / (a * b), q, n)
    if is_zero(denom):
        raise SingularParameterError("right-hand side denominator vanishes")
    rhs = q_pochhammer(c / a, q, n) * q_pochhammer(c / b, q, n) / denom
    return lhs, rhs


def big_q_jacobi(x, a, b, c, q, n: int):
    """Big q-Jacobi polynomial ``P_n(x; a, b, c; q)`` as a terminating 3phi2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x, a, b, c, q = map(coerce, (x, a, b, c, q))
    return three_phi_two(
        q ** (-n), a * b * q ** (n + 1), x, a * q, c * q, q, q, terminate_at=n
    )


def jacobi_poly(n: int, alpha, beta, x):
    """Classical Jacobi polynomial via its terminating 2F1 representation."""
    alpha, beta, x = map(coerce, (alpha, beta, x))
    lead = pochhammer(alpha + 1, n) / (Fraction(factorial(n)) if is_exact(alpha) else factorial(n))
    return lead * gauss_2f1_terminating(n, n + alpha + beta + 1, alpha + 1, (1 - x) / 2)
