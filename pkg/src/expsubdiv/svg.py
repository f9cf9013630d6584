"""Minimal SVG 1.1 output: refined curve solid, control polygon dashed.

Both are closed polylines (the first point is repeated at the end).
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

# fixed oblique view for 3-D data: rotate about z, then tilt
_YAW = math.radians(35.0)
_PITCH = math.radians(25.0)


def project(points: np.ndarray) -> np.ndarray:
    """2-D drawing coordinates (y up) of 2-D or 3-D points."""
    points = np.asarray(points, dtype=float)
    if points.shape[1] == 2:
        return points.copy()
    if points.shape[1] != 3:
        raise ValueError("only 2-D and 3-D points can be drawn")
    x, y, z = points.T
    xr = math.cos(_YAW) * x - math.sin(_YAW) * y
    yr = math.sin(_YAW) * x + math.cos(_YAW) * y
    return np.column_stack([xr, math.cos(_PITCH) * z + math.sin(_PITCH) * yr])


def _path(points: np.ndarray, closed: bool = True) -> str:
    if closed:
        points = np.vstack([points, points[:1]])
    # flip y: SVG's axis points down
    return " ".join(f"{x:.6g},{-y:.6g}" for x, y in points)


def render_svg(refined: np.ndarray, control: np.ndarray | None = None, width: int = 600) -> str:
    curve = project(refined)
    ctrl = project(control) if control is not None else None
    allpts = curve if ctrl is None else np.vstack([curve, ctrl])
    lo, hi = allpts.min(axis=0), allpts.max(axis=0)
    span = np.maximum(hi - lo, 1e-12)
    margin = 0.05 * span
    x0, y0 = lo[0] - margin[0], -(hi[1] + margin[1])
    w, h = span + 2 * margin
    height = max(1, round(width * h / w))
    stroke = 0.003 * max(w, h)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="{x0:.6g} {y0:.6g} {w:.6g} {h:.6g}">',
    ]
    if ctrl is not None:
        lines.append(
            f'  <polyline points="{_path(ctrl)}" fill="none" stroke="gray" '
            f'stroke-width="{stroke:.4g}" stroke-dasharray="{4 * stroke:.4g},{3 * stroke:.4g}"/>'
        )
    lines.append(
        f'  <polyline points="{_path(curve)}" fill="none" stroke="black" '
        f'stroke-width="{1.5 * stroke:.4g}"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(path: str | Path, refined: np.ndarray, control: np.ndarray | None = None) -> None:
    Path(path).write_text(render_svg(refined, control))
