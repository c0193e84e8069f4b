"""Minimal static SVG line charts for (n, d_n) and (n, h_n) series."""

from __future__ import annotations

from pathlib import Path

WIDTH, HEIGHT, PAD = 640, 400, 48


def _scale(points, width, height, pad):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x1 = x0 + 1
    if y1 == y0:
        y1 = y0 + 1
    sx = (width - 2 * pad) / (x1 - x0)
    sy = (height - 2 * pad) / (y1 - y0)
    return [(pad + (x - x0) * sx, height - pad - (y - y0) * sy)
            for x, y in points], (x0, x1, y0, y1)


def write_line_chart(path: str | Path, points, *, title: str = "",
                     x_label: str = "n", y_label: str = "value") -> None:
    """Write one polyline series as a standalone SVG file."""
    points = [(float(x), float(y)) for x, y in points]
    if not points:
        raise ValueError("no points to plot")
    coords, (x0, x1, y0, y1) = _scale(points, WIDTH, HEIGHT, PAD)
    poly = " ".join(f"{x:.2f},{y:.2f}" for x, y in coords)
    dots = "\n  ".join(
        f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="#1f4e79"/>'
        for x, y in coords)
    svg = f"""<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">
  <rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>
  <text x="{WIDTH / 2}" y="24" text-anchor="middle" font-family="sans-serif" font-size="16">{title}</text>
  <line x1="{PAD}" y1="{HEIGHT - PAD}" x2="{WIDTH - PAD}" y2="{HEIGHT - PAD}" stroke="#333"/>
  <line x1="{PAD}" y1="{PAD}" x2="{PAD}" y2="{HEIGHT - PAD}" stroke="#333"/>
  <text x="{WIDTH - PAD}" y="{HEIGHT - PAD + 28}" text-anchor="end" font-family="sans-serif" font-size="12">{x_label} ({x0:g} .. {x1:g})</text>
  <text x="{PAD}" y="{PAD - 10}" font-family="sans-serif" font-size="12">{y_label} ({y0:g} .. {y1:g})</text>
  <polyline points="{poly}" fill="none" stroke="#1f4e79" stroke-width="1.5"/>
  {dots}
</svg>
"""
    Path(path).write_text(svg, encoding="utf-8")
