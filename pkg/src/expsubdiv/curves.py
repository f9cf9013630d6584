"""Initial polygons for star-shaped and Lissajous test curves.

Each generator samples ``u_i = theta (i - 1)`` and returns the closed polygon
together with the scheme parameters whose exponential space contains every
frequency of the curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .subdivision import Polygon, SchemeParams
from .symbols import ThetaSpec

CurveKind = Literal["star2d", "star3d", "lissajous2d", "lissajous3d", "lissajous_sphere"]


@dataclass(frozen=True)
class CurveSpec:
    """``nu`` holds the integer frequencies: ``(nu,)`` for stars and
    ``(nu1, nu2[, nu3])`` for Lissajous curves. ``tau`` and ``rho`` are the
    phase parameters of the planar and spherical Lissajous curves."""

    kind: CurveKind
    nu: tuple
    N: int
    tau: float = 1.0
    rho: float = 0.0

    def __post_init__(self):
        arity = {"star2d": 1, "star3d": 1, "lissajous2d": 2, "lissajous3d": 3, "lissajous_sphere": 2}
        if self.kind not in arity:
            raise ValueError(f"unknown curve kind {self.kind!r}")
        if len(self.nu) != arity[self.kind]:
            raise ValueError(f"{self.kind} takes {arity[self.kind]} frequencies")
        if any(int(f) != f or f < 1 for f in self.nu):
            raise ValueError("frequencies must be positive integers")
        if self.N < 4:
            raise ValueError("N must be at least 4")

    def scheme_n(self) -> int:
        nu = self.nu
        if self.kind == "star2d":
            return nu[0] + 1
        if self.kind == "star3d":
            return 2 * nu[0]
        if self.kind == "lissajous_sphere":
            return nu[0] + nu[1]
        return max(nu)

    def theta(self) -> float:
        # the spatial Lissajous curve is sampled on [0, pi]
        if self.kind == "lissajous3d":
            return math.pi / (self.N - 1)
        return 2 * math.pi / (self.N - 1)


def _sample(spec: CurveSpec, u: np.ndarray) -> np.ndarray:
    nu = spec.nu
    if spec.kind in ("star2d", "star3d"):
        radius = 3 + np.sin(nu[0] * u)
        cols = [radius * np.cos(u), radius * np.sin(u)]
        if spec.kind == "star3d":
            cols.append(-(radius**2) / 4)
    elif spec.kind == "lissajous2d":
        nu1, nu2 = nu
        cols = [np.cos(nu2 * u), np.cos(nu1 * u - spec.tau * math.pi / nu2)]
    elif spec.kind == "lissajous3d":
        cols = [np.cos(f * u) for f in nu]
    else:
        nu1, nu2 = nu
        phase = nu1 * u - spec.rho * math.pi
        cols = [np.sin(nu2 * u) * np.cos(phase), np.sin(nu2 * u) * np.sin(phase), np.cos(nu2 * u)]
    return np.column_stack(cols)


def generate(spec: CurveSpec) -> tuple[Polygon, SchemeParams]:
    """Sample the curve and pick the matching scheme parameters.

    Samples ``i = 1..N`` cover a full period, so sample ``N`` repeats sample
    1 and is dropped. The spatial Lissajous curve is traced on ``[0, pi]``
    and retraced backwards on ``[pi, 2 pi]``; its closed polygon therefore
    continues the same step through the full period (``2(N-1)`` points).
    """
    theta = spec.theta()
    count = 2 * (spec.N - 1) if spec.kind == "lissajous3d" else spec.N - 1
    u = theta * np.arange(count)
    polygon = Polygon(_sample(spec, u), closed=True)
    return polygon, SchemeParams(spec.scheme_n(), ThetaSpec.trigonometric(theta))


def default_point_count(n: int) -> int:
    """A sample count keeping every level admissible: ``theta < pi / n`` at
    level 0 requires ``N - 1 > 2n``; twice that gives visibly coarse but
    well-conditioned polygons."""
    return 4 * n + 1
