"""Minimal self-contained SVG emission for power grids and archives.

Pure string drawing, no plotting library and no external resources; output
is deterministic for identical inputs (fixed float formatting).
"""

from __future__ import annotations

import numpy as np

# dark blue -> cyan -> yellow -> red ramp anchors
_RAMP = np.array(
    [
        (13, 8, 135),
        (70, 160, 246),
        (248, 230, 33),
        (204, 51, 17),
    ],
    dtype=float,
)


def _color(t: float) -> str:
    t = min(max(t, 0.0), 1.0)
    pos = t * (len(_RAMP) - 1)
    i = min(int(pos), len(_RAMP) - 2)
    frac = pos - i
    rgb = _RAMP[i] * (1.0 - frac) + _RAMP[i + 1] * frac
    return f"#{int(rgb[0]):02x}{int(rgb[1]):02x}{int(rgb[2]):02x}"


def heatmap_svg(grid, width: int = 480) -> str:
    """SVG heatmap of a PowerGrid, one rect per cell, low-to-high color ramp."""
    values = np.asarray(grid.values, dtype=float)
    ny, nx = values.shape
    height = int(round(width * ny / nx))
    low = float(values.min())
    span = float(values.max()) - low
    span = span if span > 0.0 else 1.0
    cw = width / nx
    ch = height / ny
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for iy in range(ny):
        for ix in range(nx):
            t = (values[iy, ix] - low) / span
            # y axis points up: row 0 (smallest y) drawn at the bottom
            parts.append(
                f'<rect x="{ix * cw:.2f}" y="{(ny - 1 - iy) * ch:.2f}" '
                f'width="{cw + 0.5:.2f}" height="{ch + 0.5:.2f}" fill="{_color(t)}"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts)


def scatter_svg(points, labels=("f1", "f2", "f3"), size: int = 220) -> str:
    """SVG scatter of 3-objective points as the three pairwise projections."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[None, :]
    pad = 30
    panel = size + 2 * pad
    pairs = ((0, 1), (0, 2), (1, 2))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{panel * 3}" height="{panel}" '
        f'viewBox="0 0 {panel * 3} {panel}">'
    ]
    for k, (a, b) in enumerate(pairs):
        x0 = k * panel + pad
        y0 = pad
        parts.append(
            f'<rect x="{x0}" y="{y0}" width="{size}" height="{size}" '
            f'fill="none" stroke="#888" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x0 + size / 2:.1f}" y="{y0 + size + 18}" font-size="11" '
            f'text-anchor="middle">{labels[a]} vs {labels[b]}</text>'
        )
        if pts.shape[0]:
            ax = pts[:, a]
            bx = pts[:, b]
            a_low, a_span = float(ax.min()), float(ax.max() - ax.min()) or 1.0
            b_low, b_span = float(bx.min()), float(bx.max() - bx.min()) or 1.0
            for va, vb in zip(ax, bx):
                px = x0 + (va - a_low) / a_span * size
                py = y0 + size - (vb - b_low) / b_span * size
                parts.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="2.5" fill="#1f6fb2"/>')
    parts.append("</svg>")
    return "\n".join(parts)
