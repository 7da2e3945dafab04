"""Deterministic serialization: CSV for sampled maps and SVG polylines for
planar curves.

Floats are written with repr (shortest round-trip decimal), '.' decimal
separator, '\n' line endings; identical inputs yield byte-identical output.
"""
from __future__ import annotations

import numpy as np

from .frontal import SampledMap


def _fmt(v: float) -> str:
    return repr(float(v))


def sampled_map_to_csv(sm: SampledMap) -> str:
    """CSV with header t1..tn,f1..fm,nu1..num (nu columns only when the
    Gauss map was sampled)."""
    n = sm.params.shape[1]
    m = sm.values.shape[1]
    header = [f"t{j + 1}" for j in range(n)] + [f"f{j + 1}" for j in range(m)]
    if sm.gauss is not None:
        header += [f"nu{j + 1}" for j in range(m)]
    lines = [",".join(header)]
    for i in range(sm.params.shape[0]):
        row = [_fmt(v) for v in sm.params[i]] + [_fmt(v) for v in sm.values[i]]
        if sm.gauss is not None:
            row += [_fmt(v) for v in sm.gauss[i]]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def _split_arcs(points: np.ndarray) -> list[np.ndarray]:
    """Split a sampled curve where consecutive samples jump by more than
    10x the median step (mirror-point clusters joined to distant arcs)."""
    if points.shape[0] < 2:
        return [points]
    steps = np.linalg.norm(np.diff(points, axis=0), axis=1)
    med = float(np.median(steps))
    if med <= 0.0:
        nz = steps[steps > 0]
        med = float(np.median(nz)) if nz.size else 0.0
    if med <= 0.0:
        return [points]
    breaks = np.nonzero(steps > 10.0 * med)[0]
    arcs = []
    start = 0
    for b in breaks:
        arcs.append(points[start:b + 1])
        start = b + 1
    arcs.append(points[start:])
    return [a for a in arcs if a.shape[0] > 0]


def curve_to_svg(points: np.ndarray) -> str:
    """SVG document with one polyline per connected arc of the sampled
    planar curve; viewBox is the data bbox plus 5% pad, stroke width 0.5%
    of the bbox diagonal."""
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[1] != 2:
        raise ValueError("curve_to_svg requires (k, 2) points")
    lo = points.min(axis=0)
    hi = points.max(axis=0)
    span = hi - lo
    diag = float(np.linalg.norm(span))
    if diag <= 0.0:
        diag = 1.0
        span = np.array([1.0, 1.0])
    pad = 0.05 * span
    pad[pad <= 0.0] = 0.05 * diag
    x0, y0 = lo - pad
    w, h = span + 2 * pad
    stroke = 0.005 * diag
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        # flip y so the mathematical orientation renders upright
        f'<g transform="translate(0 {_fmt(2 * y0 + h)}) scale(1 -1)" '
        f'fill="none" stroke="black" stroke-width="{_fmt(stroke)}" '
        f'stroke-linecap="round">',
    ]
    for arc in _split_arcs(points):
        pts = " ".join(f"{_fmt(p[0])},{_fmt(p[1])}" for p in arc)
        lines.append(f'<polyline points="{pts}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
