"""Deterministic SVG diagrams of the rectangle, the separating line and the
symmetry features.

Coordinates follow the geometric convention: x rightward, y upward, one
lattice unit per 24 SVG units, axes labeled from 1. Output is built from
sorted data with fixed formatting, so identical inputs give byte-identical
documents.
"""

from __future__ import annotations

from .lattice import DEFAULT_ENUM_CAP, LatticeRect, enumerate_points, partition_counts
from .symmetry import Symmetry, fixed_points, side_flip_violations

GRID = 24
POINT_RADIUS = 5
MARGIN_LEFT = 56
MARGIN_RIGHT = 160  # room for the legend
MARGIN_TOP = 40
MARGIN_BOTTOM = 48

COLOR_PLUS = "#1f77b4"       # q*x < p*y
COLOR_MINUS = "#d62728"      # q*x > p*y
COLOR_LINE = "#2c3e50"
COLOR_GRID = "#d9d9d9"
COLOR_FRAME = "#999999"
COLOR_CENTER = "#f1c40f"     # ring around a point fixed by the central map
COLOR_VIOLATION = "#8e44ad"  # segment linking a same-side pair


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_svg(rect: LatticeRect, cap: int = DEFAULT_ENUM_CAP) -> str:
    """Draw the rectangle for one prime pair as an SVG 1.1 document.

    Points are colored by side of q*x = p*y, the line itself runs from the
    origin through the rectangle, a point fixed by the central reflection
    gets a ring, and any same-side centrally symmetric pair is linked by a
    dashed segment.
    """
    p, q = rect.pair
    w, h = rect.width, rect.height
    points = list(enumerate_points(rect, cap))
    counts = partition_counts(rect)
    center = fixed_points(Symmetry.CENTRAL, rect, cap).fixed
    violations = side_flip_violations(rect, cap)

    width_px = MARGIN_LEFT + (w + 1) * GRID + MARGIN_RIGHT
    height_px = MARGIN_TOP + (h + 1) * GRID + MARGIN_BOTTOM

    def px(x: float) -> float:
        return MARGIN_LEFT + x * GRID

    def py(y: float) -> float:
        return MARGIN_TOP + (h + 1 - y) * GRID

    lines: list[str] = []
    lines.append('<?xml version="1.0" encoding="UTF-8"?>')
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width_px}" height="{height_px}" viewBox="0 0 {width_px} {height_px}">'
    )
    lines.append(f'<rect x="0" y="0" width="{width_px}" height="{height_px}" fill="#ffffff"/>')
    lines.append(
        f'<text x="{MARGIN_LEFT}" y="24" font-family="monospace" font-size="14" fill="#000000">'
        f"p = {p}, q = {q}   |S+| = {counts.n_plus}, |S-| = {counts.n_minus}</text>"
    )

    # unit grid and a dashed frame around the point region
    step = max(1, (max(w, h) + 29) // 30)
    for x in range(1, w + 1):
        lines.append(
            f'<line x1="{_fmt(px(x))}" y1="{_fmt(py(0.5))}" x2="{_fmt(px(x))}" y2="{_fmt(py(h + 0.5))}" '
            f'stroke="{COLOR_GRID}" stroke-width="1"/>'
        )
    for y in range(1, h + 1):
        lines.append(
            f'<line x1="{_fmt(px(0.5))}" y1="{_fmt(py(y))}" x2="{_fmt(px(w + 0.5))}" y2="{_fmt(py(y))}" '
            f'stroke="{COLOR_GRID}" stroke-width="1"/>'
        )
    lines.append(
        f'<rect x="{_fmt(px(0.5))}" y="{_fmt(py(h + 0.5))}" width="{w * GRID}" height="{h * GRID}" '
        f'fill="none" stroke="{COLOR_FRAME}" stroke-width="1" stroke-dasharray="4,3"/>'
    )

    # axes through the origin and 1-based labels
    lines.append(
        f'<line x1="{_fmt(px(0))}" y1="{_fmt(py(0))}" x2="{_fmt(px(w + 1))}" y2="{_fmt(py(0))}" '
        f'stroke="#555555" stroke-width="1"/>'
    )
    lines.append(
        f'<line x1="{_fmt(px(0))}" y1="{_fmt(py(0))}" x2="{_fmt(px(0))}" y2="{_fmt(py(h + 1))}" '
        f'stroke="#555555" stroke-width="1"/>'
    )
    for x in range(1, w + 1, step):
        lines.append(
            f'<text x="{_fmt(px(x))}" y="{_fmt(py(0) + 16)}" font-family="monospace" font-size="11" '
            f'fill="#333333" text-anchor="middle">{x}</text>'
        )
    for y in range(1, h + 1, step):
        lines.append(
            f'<text x="{_fmt(px(0) - 8)}" y="{_fmt(py(y) + 4)}" font-family="monospace" font-size="11" '
            f'fill="#333333" text-anchor="end">{y}</text>'
        )

    # the line q*x = p*y from the origin to the plot edge, exact comparison
    if q * (w + 1) <= p * (h + 1):
        end_x, end_y = float(w + 1), q * (w + 1) / p
    else:
        end_x, end_y = p * (h + 1) / q, float(h + 1)
    lines.append(
        f'<line x1="{_fmt(px(0))}" y1="{_fmt(py(0))}" x2="{_fmt(px(end_x))}" y2="{_fmt(py(end_y))}" '
        f'stroke="{COLOR_LINE}" stroke-width="1.5"/>'
    )

    # same-side pairs first, so their segments sit under the points
    for a, b in violations:
        lines.append(
            f'<line x1="{_fmt(px(a.x))}" y1="{_fmt(py(a.y))}" x2="{_fmt(px(b.x))}" y2="{_fmt(py(b.y))}" '
            f'stroke="{COLOR_VIOLATION}" stroke-width="2.5" stroke-dasharray="6,3"/>'
        )

    for pt in points:
        color = COLOR_MINUS if pt.side_value > 0 else COLOR_PLUS
        lines.append(
            f'<circle cx="{_fmt(px(pt.x))}" cy="{_fmt(py(pt.y))}" r="{POINT_RADIUS}" fill="{color}"/>'
        )

    for pt in center:
        lines.append(
            f'<circle cx="{_fmt(px(pt.x))}" cy="{_fmt(py(pt.y))}" r="{POINT_RADIUS + 4}" '
            f'fill="none" stroke="{COLOR_CENTER}" stroke-width="3"/>'
        )

    # legend
    legend_x = MARGIN_LEFT + (w + 1) * GRID + 16
    entries = [
        (COLOR_MINUS, "q*x &gt; p*y  (S-)"),
        (COLOR_PLUS, "q*x &lt; p*y  (S+)"),
    ]
    if center:
        entries.append((COLOR_CENTER, "central fixed point"))
    if violations:
        entries.append((COLOR_VIOLATION, "same-side pair"))
    for row, (color, label) in enumerate(entries):
        y_px = MARGIN_TOP + 12 + 18 * row
        lines.append(f'<circle cx="{legend_x + 6}" cy="{y_px}" r="5" fill="{color}"/>')
        lines.append(
            f'<text x="{legend_x + 18}" y="{y_px + 4}" font-family="monospace" font-size="11" '
            f'fill="#333333">{label}</text>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
