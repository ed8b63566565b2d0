"""Static SVG rendering of a tour over a coordinate instance.

Cities are dots, the heuristic tour a solid closed polyline, an optional
reference tour a dashed one. Output is deterministic text.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import ConfigError
from .instance import Instance

_MARGIN = 20.0
_WIDTH = 800.0


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def plot_tour_svg(instance: Instance, order: Sequence[int],
                  reference_order: Optional[Sequence[int]] = None) -> str:
    """Render the tour(s) as an SVG 1.1 document string."""
    if instance.coords is None:
        raise ConfigError("cannot plot an EXPLICIT (coordinate-free) instance")
    xs = [c[0] for c in instance.coords]
    ys = [c[1] for c in instance.coords]
    span_x = max(xs) - min(xs) or 1.0
    span_y = max(ys) - min(ys) or 1.0
    scale = (_WIDTH - 2 * _MARGIN) / max(span_x, span_y)
    height = span_y * scale + 2 * _MARGIN

    def to_px(c):
        # flip y so north is up
        return ((c[0] - min(xs)) * scale + _MARGIN,
                height - ((c[1] - min(ys)) * scale + _MARGIN))

    def path_d(seq) -> str:
        pts = [to_px(instance.coords[i]) for i in seq]
        body = " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts)
        return f"M {body} Z"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(_WIDTH)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(_WIDTH)} {_fmt(height)}">',
        f'<title>{instance.name}</title>',
    ]
    if reference_order is not None:
        lines.append(f'<path d="{path_d(reference_order)}" fill="none" '
                     'stroke="#888888" stroke-width="1" '
                     'stroke-dasharray="4 3"/>')
    lines.append(f'<path d="{path_d(order)}" fill="none" '
                 'stroke="#1f4e9c" stroke-width="1.5"/>')
    for c in instance.coords:
        x, y = to_px(c)
        lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="2.5" '
                     'fill="#c03020"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
