"""Deterministic SVG rendering of scenes.

Each ball becomes one circle whose fill encodes the first region that lists
it and whose stroke draws the boundary circle; points become small markers.
The output is assembled from plain strings in declaration order, so a fixed
scene and options always produce identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scene import Scene

_PALETTE = (
    "#4477aa",
    "#ee6677",
    "#228833",
    "#ccbb44",
    "#66ccee",
    "#aa3377",
    "#bbbbbb",
)
_UNREGIONED_FILL = "#dddddd"


@dataclass(frozen=True)
class RenderOptions:
    width: int = 480
    margin: Fraction = Fraction(1, 10)  # fraction of the scene extent
    stroke_width: str = "0.02"


def _fmt(x: Fraction) -> str:
    return repr(float(x))


def render_svg(scene: Scene, options: RenderOptions | None = None) -> str:
    """Render a scene to an SVG document string."""
    options = options or RenderOptions()
    xs_lo = [b.cx - b.r for b in scene.balls.values()]
    xs_hi = [b.cx + b.r for b in scene.balls.values()]
    ys_lo = [b.cy - b.r for b in scene.balls.values()]
    ys_hi = [b.cy + b.r for b in scene.balls.values()]
    for p in scene.points.values():
        xs_lo.append(p.cx)
        xs_hi.append(p.cx)
        ys_lo.append(p.cy)
        ys_hi.append(p.cy)
    xlo, xhi = min(xs_lo), max(xs_hi)
    ylo, yhi = min(ys_lo), max(ys_hi)
    span = max(xhi - xlo, yhi - ylo, Fraction(1))
    pad = span * options.margin
    xlo, xhi = xlo - pad, xhi + pad
    ylo, yhi = ylo - pad, yhi + pad
    width = options.width
    height = max(1, round(width * float((yhi - ylo) / (xhi - xlo))))

    fill_of: dict[str, str] = {}
    for index, members in enumerate(scene.regions.values()):
        color = _PALETTE[index % len(_PALETTE)]
        for member in members:
            fill_of.setdefault(member, color)

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width}" height="{height}" '
        f'viewBox="{_fmt(xlo)} {_fmt(-yhi)} {_fmt(xhi - xlo)} {_fmt(yhi - ylo)}">',
        # The y axis is negated so the scene's y grows upward in the image.
    ]
    for name, ball in scene.balls.items():
        fill = fill_of.get(name, _UNREGIONED_FILL)
        lines.append(
            f'<circle cx="{_fmt(ball.cx)}" cy="{_fmt(-ball.cy)}" r="{_fmt(ball.r)}" '
            f'fill="{fill}" fill-opacity="0.45" stroke="#222222" '
            f'stroke-width="{options.stroke_width}"><title>{name}</title></circle>'
        )
    marker_r = _fmt(span / 120)
    for name, point in scene.points.items():
        lines.append(
            f'<circle cx="{_fmt(point.cx)}" cy="{_fmt(-point.cy)}" r="{marker_r}" '
            f'fill="#000000"><title>{name}</title></circle>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
