"""ASCII and SVG drawings of polygons and exploration walks."""

from __future__ import annotations

from collections import Counter

from .explore import ExplorationTrace
from .grid import HEX, Cell, center, corners, is_up
from .polygon import GridPolygon

PALETTE = {
    "cell": "#e8eef4",
    "visited_twice": "#c6d8ea",
    "split": "#f4b183",
    "start": "#70ad47",
    "stroke": "#44546a",
    "walk": "#c00000",
}


class RenderError(ValueError):
    pass


def _check(poly: GridPolygon, trace: ExplorationTrace | None) -> None:
    if trace is None:
        return
    if trace.kind is not poly.kind:
        raise RenderError(f"trace is on a {trace.kind.value} grid, polygon on {poly.kind.value}")
    stray = set(trace.walk) - poly.free
    if stray:
        raise RenderError(f"trace leaves the polygon at {min(stray)}")


def _visits(trace: ExplorationTrace) -> Counter:
    # the closing return to the start is not a separate visit
    return Counter(trace.walk[:-1] if len(trace.walk) > 1 else trace.walk)


def render_ascii(poly: GridPolygon, trace: ExplorationTrace | None = None) -> str:
    """Coarse text sketch: ``S`` start, ``*`` split cell, digits count visits."""
    _check(poly, trace)
    marks: dict[Cell, str] = {}
    if trace is not None:
        for c, k in _visits(trace).items():
            marks[c] = str(min(k, 9))
        for ev in trace.events:
            marks[ev.at] = "*"
        marks[trace.start] = "S"

    def glyph(c: Cell) -> str:
        if c in marks:
            return marks[c]
        if poly.kind is HEX:
            return "o"
        return "^" if is_up(c) else "v"

    if poly.kind is HEX:
        placed = {(2 * q + r, r): (q, r) for q, r in poly.free}
        rows = sorted({y for _, y in placed})
    else:
        placed = {(x, -y): (x, y) for x, y in poly.free}
        rows = sorted({y for _, y in placed})
    x0 = min(x for x, _ in placed)
    lines = []
    for y in rows:
        xs = [x for x, yy in placed if yy == y]
        line = [" "] * (max(xs) - x0 + 1)
        for x in xs:
            line[x - x0] = glyph(placed[(x, y)])
        lines.append("".join(line).rstrip())
    return "\n".join(lines) + "\n"


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def render_svg(poly: GridPolygon, trace: ExplorationTrace | None = None, scale: float = 24.0) -> str:
    """Cells as regular polygons with unit edges; the walk as a polyline."""
    _check(poly, trace)
    kind = poly.kind
    cells = sorted(poly.free)
    pts = [p for c in cells for p in corners(c, kind)]
    pad = 0.5
    minx = min(x for x, _ in pts) - pad
    miny = min(y for _, y in pts) - pad
    w = max(x for x, _ in pts) + pad - minx
    h = max(y for _, y in pts) + pad - miny

    split = {ev.at for ev in trace.events} if trace else set()
    visits = _visits(trace) if trace else Counter()
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(minx)} {_fmt(miny)} {_fmt(w)} {_fmt(h)}" '
        f'width="{_fmt(w * scale)}" height="{_fmt(h * scale)}">',
        f'<g stroke="{PALETTE["stroke"]}" stroke-width="0.04">',
    ]
    for c in cells:
        if trace is not None and c == trace.start:
            fill = PALETTE["start"]
        elif c in split:
            fill = PALETTE["split"]
        elif visits[c] > 1:
            fill = PALETTE["visited_twice"]
        else:
            fill = PALETTE["cell"]
        poly_pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in corners(c, kind))
        out.append(f'<polygon class="cell" data-cell="{c[0]},{c[1]}" points="{poly_pts}" fill="{fill}"/>')
    out.append("</g>")
    if trace is not None and len(trace.walk) > 1:
        line = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (center(c, kind) for c in trace.walk))
        out.append(
            f'<polyline class="walk" points="{line}" fill="none" stroke="{PALETTE["walk"]}" '
            'stroke-width="0.1" stroke-linejoin="round"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
