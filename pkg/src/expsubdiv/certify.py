"""Identity suites shared by the CLI and the test-suite.

Each suite yields :class:`IdentityRecord` entries holding both sides of one
identity instance; rational inputs are compared exactly, float inputs by
absolute residual.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Iterator

from .chebyshev import (
    cheb_T,
    identity_sum_lhs,
    identity_sum_rhs,
    lemma_sum_lhs,
    recip_T_via_phi,
)
from .errors import SingularParameterError
from .qseries import (
    big_q_jacobi,
    gauss_2f1_terminating,
    jacobi_poly,
    pochhammer,
    q_saalschutz_check,
)
from .scalar import format_scalar, is_exact

DEFAULT_T = (Fraction(2), Fraction(3, 2), Fraction(5), Fraction(7, 3))
FLOAT_TOL = 1e-10


@dataclass
class IdentityRecord:
    identity: str
    n: int
    t: object
    lhs: object
    rhs: object

    @property
    def residual(self) -> float:
        diff = complex(self.lhs - self.rhs)
        return abs(diff) if diff == diff else math.inf

    def passed(self, tol: float = FLOAT_TOL) -> bool:
        if is_exact(self.lhs) and is_exact(self.rhs):
            return self.lhs == self.rhs
        return self.residual <= tol

    def to_json_obj(self, tol: float = FLOAT_TOL) -> dict:
        return {
            "identity": self.identity,
            "n": self.n,
            "t": _fmt(self.t),
            "lhs": _fmt(self.lhs),
            "rhs": _fmt(self.rhs),
            "pass": self.passed(tol),
        }


def _fmt(x):
    if isinstance(x, tuple):
        return [format_scalar(c) for c in x]
    return format_scalar(x)


def _x_of(t):
    return (t + 1 / t) / 2


def prop1_suite(n_max: int, ts: Iterable) -> Iterator[IdentityRecord]:
    """3phi2 = 2 t^n / (1 + t^(2n)) = 1 / T_n(x)."""
    for t in ts:
        for n in range(n_max + 1):
            phi = recip_T_via_phi(n, t)
            yield IdentityRecord("prop1_closed", n, t, phi, 2 * t**n / (1 + t ** (2 * n)))
            yield IdentityRecord("prop1_chebyshev", n, t, phi, 1 / cheb_T(n, _x_of(t)))


def main_result1_suite(n_max: int, ts: Iterable) -> Iterator[IdentityRecord]:
    """P_n(t; -1/t, -1/t, -1; t^2) = 1 / T_n(x), and the Jacobi corollary."""
    for t in ts:
        for n in range(n_max + 1):
            bigq = big_q_jacobi(t, -1 / t, -1 / t, -1, t * t, n)
            x = _x_of(t)
            yield IdentityRecord("main_result1", n, t, bigq, 1 / cheb_T(n, x))
            half = Fraction(1, 2) if is_exact(t) else 0.5
            # a float series can cancel to exactly 0; keep the record as a failure
            rhs = pochhammer(half, n) / (factorial(n) * bigq) if bigq != 0 else math.inf
            yield IdentityRecord("jacobi_link", n, t, jacobi_poly(n, -half, -half, x), rhs)


def remark2_suite(n_max: int, ts: Iterable) -> Iterator[IdentityRecord]:
    """3phi2 * 2F1(-n, n; 1/2; -(t-1)^2/(4t)) = 1."""
    for t in ts:
        half = Fraction(1, 2) if is_exact(t) else 0.5
        for n in range(n_max + 1):
            f21 = gauss_2f1_terminating(n, n, half, -((t - 1) ** 2) / (4 * t))
            one = Fraction(1) if is_exact(t) else 1.0
            yield IdentityRecord("remark2", n, t, recip_T_via_phi(n, t) * f21, one)


def lemma3_suite(n_max: int, ts: Iterable) -> Iterator[IdentityRecord]:
    for t in ts:
        for n in range(1, n_max + 1):
            yield IdentityRecord("lemma3", n, t, lemma_sum_lhs(n, t), recip_T_via_phi(n, t) - 1)


def prop4_suite(n_max: int, ts: Iterable) -> Iterator[IdentityRecord]:
    """The Chebyshev key identity at x = (t + 1/t)/2."""
    for t in ts:
        x = _x_of(t)
        for n in range(1, n_max + 1):
            yield IdentityRecord("prop4", n, t, identity_sum_lhs(n, x), identity_sum_rhs(n, x))


def prop4_points_suite(n_max: int, xs: Iterable) -> Iterator[IdentityRecord]:
    """The key identity at explicit arguments ``x`` (recorded in the t slot)."""
    for x in xs:
        for n in range(1, n_max + 1):
            yield IdentityRecord("prop4", n, x, identity_sum_lhs(n, x), identity_sum_rhs(n, x))


def _random_rational(rng: random.Random, lo: int = -9, hi: int = 9) -> Fraction:
    while True:
        num = rng.randint(lo, hi)
        if num:
            return Fraction(num, rng.randint(1, hi))


def random_saalschutz_tuples(count: int, n_max: int = 6, seed: int = 0):
    """``(n, a, b, c, q)`` tuples avoiding singular parameters."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, n_max)
        a, b, c = (_random_rational(rng) for _ in range(3))
        q = _random_rational(rng)
        if q in (1, -1):
            continue
        try:
            q_saalschutz_check(n, a, b, c, q)
        except (SingularParameterError, ZeroDivisionError):
            continue
        out.append((n, a, b, c, q))
    return out


def saalschutz_suite(count: int = 200, n_max: int = 6, seed: int = 0) -> Iterator[IdentityRecord]:
    for n, a, b, c, q in random_saalschutz_tuples(count, n_max, seed):
        lhs, rhs = q_saalschutz_check(n, a, b, c, q)
        yield IdentityRecord("q_saalschutz", n, (a, b, c, q), lhs, rhs)


SUITES: dict[str, Callable[..., Iterator[IdentityRecord]]] = {
    "prop1": prop1_suite,
    "main_result1": main_result1_suite,
    "remark2": remark2_suite,
    "lemma3": lemma3_suite,
    "prop4": prop4_suite,
}


def run_all(n_max: int, ts: Iterable = DEFAULT_T, saalschutz_count: int = 200, seed: int = 0):
    """All suites; returns ``{suite name: [records]}``."""
    ts = tuple(ts)
    results = {name: list(suite(n_max, ts)) for name, suite in SUITES.items()}
    results["q_saalschutz"] = list(saalschutz_suite(saalschutz_count, min(n_max, 6), seed))
    return results
