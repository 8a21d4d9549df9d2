from __future__ import annotations

import re

import pytest

from gridexplore.explore import explore_smartdfs
from gridexplore.generators import corridor, honeycomb, random_simple
from gridexplore.grid import HEX, TRI
from gridexplore.render import PALETTE, RenderError, render_ascii, render_svg


def walk_points(svg: str) -> list[str]:
    m = re.search(r'class="walk" points="([^"]*)"', svg)
    return m.group(1).split() if m else []


def test_honeycomb_svg_has_seven_cells():
    svg = render_svg(honeycomb(1))
    assert svg.count('class="cell"') == 7
    assert 'class="walk"' not in svg
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")


@pytest.mark.parametrize("kind", [HEX, TRI])
def test_corridor_polyline_segments(kind):
    p = corridor(kind, 1, 6)
    svg = render_svg(p, explore_smartdfs(p))
    assert len(walk_points(svg)) - 1 == 2 * (p.C - 1)


def test_hexagons_and_triangles_have_unit_edges():
    for p, k in ((honeycomb(1), 6), (corridor(TRI, 2, 4), 3)):
        svg = render_svg(p)
        for pts in re.findall(r'<polygon class="cell"[^>]* points="([^"]*)"', svg):
            xy = [tuple(map(float, q.split(","))) for q in pts.split()]
            assert len(xy) == k
            for a, b in zip(xy, xy[1:] + xy[:1]):
                assert abs(((a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2) ** 0.5 - 1) < 2e-3


def test_split_cells_highlighted():
    p = random_simple(TRI, 30, 4)
    t = explore_smartdfs(p)
    svg = render_svg(p, t)
    assert svg.count(PALETTE["split"]) == len({ev.at for ev in t.events} - {t.start})


def test_byte_stable():
    p = random_simple(HEX, 25, 3)
    t = explore_smartdfs(p)
    assert render_svg(p, t) == render_svg(p, t)
    assert render_ascii(p, t) == render_ascii(p, t)


def test_mismatched_kind():
    p = corridor(HEX, 1, 4)
    t = explore_smartdfs(corridor(TRI, 1, 4))
    with pytest.raises(RenderError):
        render_svg(p, t)


def test_trace_outside_polygon():
    t = explore_smartdfs(corridor(HEX, 1, 6))
    with pytest.raises(RenderError):
        render_ascii(corridor(HEX, 1, 4), t)


def test_ascii_honeycomb():
    assert render_ascii(honeycomb(1)) == " o o\no o o\n o o\n"


def test_ascii_marks_start_and_revisits():
    p = corridor(HEX, 1, 3)
    assert render_ascii(p, explore_smartdfs(p)) == "S 2 1\n"


def test_ascii_triangles():
    assert render_ascii(corridor(TRI, 1, 4)) == "^v^v\n"
