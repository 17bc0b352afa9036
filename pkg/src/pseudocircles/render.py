"""Deterministic SVG drawings of wiring diagrams."""

from __future__ import annotations

from dataclasses import dataclass

from . import wiring as wir
from .arrangement import CROSS


@dataclass(frozen=True)
class RenderOptions:
    dx: float = 24.0
    dy: float = 28.0
    margin: float = 20.0
    shade: bool = False          # shade triangles gray and digons dark (annular only)
    stroke: float = 1.6


_COLOURS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
            "#e377c2", "#17becf", "#bcbd22", "#7f7f7f")


def _f(x: float) -> str:
    return f"{x:.2f}"


def render_svg(w, options: RenderOptions = RenderOptions()) -> str:
    o = options
    L = len(w.events)
    width = 2 * o.margin + (L + 1) * o.dx
    height = 2 * o.margin + max(w.n - 1, 1) * o.dy
    y = [o.margin + p * o.dy for p in range(w.n)]
    x = [o.margin + (k + 1) * o.dx for k in range(L)]
    left, right = o.margin, width - o.margin
    h = o.dx * 0.4
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" height="{_f(height)}" '
             f'viewBox="0 0 {_f(width)} {_f(height)}">',
             f'<rect x="{_f(left)}" y="0" width="{_f(right - left)}" height="{_f(height)}" '
             'fill="white" stroke="none"/>']

    if o.shade and w.annular and w.n >= 2:
        parts += _shade(w, o, x, y, left, right, height)

    paths = {i: [f"M {_f(left)} {_f(y[i])}"] for i in range(w.n)}
    for k, s, kind, upper, lower in wir.simulate(w):
        ys, yl = y[s], y[s + 1]
        if kind == CROSS:
            paths[upper].append(f"L {_f(x[k] - h)} {_f(ys)} L {_f(x[k] + h)} {_f(yl)}")
            paths[lower].append(f"L {_f(x[k] - h)} {_f(yl)} L {_f(x[k] + h)} {_f(ys)}")
        else:
            mid = (ys + yl) / 2
            paths[upper].append(f"L {_f(x[k] - h)} {_f(ys)} Q {_f(x[k])} {_f(mid)} {_f(x[k] + h)} {_f(ys)}")
            paths[lower].append(f"L {_f(x[k] - h)} {_f(yl)} Q {_f(x[k])} {_f(mid)} {_f(x[k] + h)} {_f(yl)}")
            parts.append(f'<circle class="touch" cx="{_f(x[k])}" cy="{_f(mid)}" r="2.00" fill="black"/>')
    pos = wir.final_order(w)
    for p, i in enumerate(pos):
        paths[i].append(f"L {_f(right)} {_f(y[p])}")
    for i in range(w.n):
        colour = _COLOURS[i % len(_COLOURS)]
        parts.append(f'<path class="wire" data-wire="{i}" d="{" ".join(paths[i])}" fill="none" '
                     f'stroke="{colour}" stroke-width="{_f(o.stroke)}"/>')
    if w.annular:
        for edge in (left, right):
            parts.append(f'<line x1="{_f(edge)}" y1="0" x2="{_f(edge)}" y2="{_f(height)}" '
                         'stroke="gray" stroke-dasharray="4 3"/>')
            for yy in y:
                parts.append(f'<line class="tick" x1="{_f(edge - 4)}" y1="{_f(yy)}" '
                             f'x2="{_f(edge + 4)}" y2="{_f(yy)}" stroke="gray"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _shade(w, o: RenderOptions, x, y, left, right, height) -> list[str]:
    out = []
    for cell in wir.wiring_cells(w):
        k = len(cell.corners)
        if cell.crossings(w) != k or k not in (2, 3):
            continue
        cls, fill = ("triangle", "#c8c8c8") if k == 3 else ("digon", "#505050")
        if cell.slot == -1:
            d = f"M {_f(left)} 0 H {_f(right)} V {_f(y[0])} H {_f(left)} Z"
        elif cell.slot == w.n - 1:
            d = f"M {_f(left)} {_f(y[-1])} H {_f(right)} V {_f(height)} H {_f(left)} Z"
        else:
            top, bot = y[cell.slot], y[cell.slot + 1]
            a, b = x[cell.start], x[cell.end]
            if a < b:
                d = _band(a, b, top, bot)
            else:
                d = _band(a, right, top, bot) + " " + _band(left, b, top, bot)
        out.append(f'<path class="{cls}" d="{d}" fill="{fill}" stroke="none"/>')
    return out


def _band(a: float, b: float, top: float, bot: float) -> str:
    mid = (top + bot) / 2
    return f"M {_f(a)} {_f(mid)} L {_f(a)} {_f(top)} L {_f(b)} {_f(top)} L {_f(b)} {_f(bot)} L {_f(a)} {_f(bot)} Z"
