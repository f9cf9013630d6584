"""Non-stationary interpolatory refinement of closed polygons.

One step maps ``N`` points to ``2N`` with ``p'_i = sum_j m_{i-2j} p_j``
(indices modulo ``N``). For an interpolatory mask this copies ``p_j`` to
``p'_{2j}`` and only the odd coefficients produce new points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DegenerateLevelError, UnsupportedBoundaryError
from .symbols import SubdivisionMask, ThetaSpec, interpolatory_symbol, level_param

INTERPOLATORY_TOL = 1e-9


@dataclass(frozen=True)
class Polygon:
    points: np.ndarray
    closed: bool = True

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2:
            raise ValueError("points must be an (N, d) array")
        if self.closed and len(pts) < 3:
            raise ValueError("a closed polygon needs at least 3 points")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def dim(self) -> int:
        return self.points.shape[1]


@dataclass(frozen=True)
class SchemeParams:
    n: int
    theta: ThetaSpec = field(default_factory=ThetaSpec.zero)


def _odd_taps(mask: SubdivisionMask) -> list[tuple[int, float]]:
    sym = mask.symbol
    for e, c in sym.terms().items():
        if e % 2 == 0:
            target = 1.0 if e == 0 else 0.0
            if abs(float(c) - target) > INTERPOLATORY_TOL:
                raise ValueError(f"mask is not interpolatory (coefficient {c} at z^{e})")
    if abs(float(sym.coeff(0)) - 1.0) > INTERPOLATORY_TOL:
        raise ValueError("mask is not interpolatory (center coefficient must be 1)")
    return [(e, float(c)) for e, c in sym.terms().items() if e % 2]


def refine_once(polygon: Polygon, mask: SubdivisionMask) -> Polygon:
    """One interpolatory refinement step of a closed polygon."""
    if not polygon.closed:
        raise UnsupportedBoundaryError("only closed polygons can be refined")
    p = polygon.points
    out = np.empty((2 * len(p), p.shape[1]))
    out[0::2] = p
    odd = np.zeros_like(p)
    for e, c in _odd_taps(mask):
        # p'_{2j+1} gets m_e p_{j + (1-e)/2}
        odd += c * np.roll(p, -((1 - e) // 2), axis=0)
    out[1::2] = odd
    return Polygon(out, closed=True)


def level_masks(params: SchemeParams, steps: int) -> list[SubdivisionMask]:
    """Masks for levels ``0 .. steps-1``; fails on the first degenerate level."""
    masks = []
    for k in range(steps):
        v = level_param(params.theta, k).v
        try:
            mask = interpolatory_symbol(params.n, v)
        except DegenerateLevelError as exc:
            raise DegenerateLevelError(
                f"level {k} (v = {v}): {exc}", index=exc.index, level=k
            ) from exc
        masks.append(mask)
    return masks


def subdivide(polygon: Polygon, params: SchemeParams, steps: int) -> Polygon:
    """Apply ``steps`` levels; all masks are built before any refinement."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if not polygon.closed:
        raise UnsupportedBoundaryError("only closed polygons can be refined")
    for mask in level_masks(params, steps):
        polygon = refine_once(polygon, mask)
    return polygon


def read_csv(path: str | Path) -> Polygon:
    pts = np.loadtxt(path, delimiter=",", ndmin=2)
    return Polygon(pts, closed=True)


def write_csv(polygon: Polygon, path: str | Path) -> None:
    np.savetxt(path, polygon.points, delimiter=",", fmt="%.17g")
