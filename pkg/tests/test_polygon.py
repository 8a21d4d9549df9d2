from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gridexplore.generators import corridor, honeycomb, random_simple, tri_hexagon
from gridexplore.grid import HEX, TRI, neighbors, surrounding, touching
from gridexplore.polygon import (
    GridPolygon,
    PolygonError,
    bfs_distances,
    holes,
    is_simple,
    layer_map,
    layers,
    metrics,
    offset,
    perimeter,
)

from strategies import simple_polygons


def peel(cells, kind):
    """Layer oracle: strip every cell touching the outside, repeat."""
    rest = set(cells)
    out = {}
    k = 0
    while rest:
        k += 1
        shell = {c for c in rest if any(n not in rest for n in surrounding(c, kind))}
        for c in shell:
            out[c] = k
        rest -= shell
    return out


def test_single_hex_cell():
    p = GridPolygon(HEX, frozenset({(0, 0)}))
    assert metrics(p).C == 1 and metrics(p).E == 6
    assert is_simple(p)
    assert layers(p) == {(0, 0): 1}


def test_single_tri_cell():
    p = GridPolygon(TRI, frozenset({(0, 0)}))
    assert (p.C, p.E) == (1, 3)


@pytest.mark.parametrize("n", [1, 2, 5, 17])
def test_hex_corridor_perimeter(n):
    p = corridor(HEX, 1, n)
    assert p.E == 4 * p.C + 2


@pytest.mark.parametrize("n", [1, 2, 5, 17])
def test_tri_corridor_perimeter(n):
    p = corridor(TRI, 1, n)
    assert p.C == p.E - 2


def test_honeycomb_metrics_and_layers():
    p = honeycomb(1)
    assert (p.C, p.E) == (7, 18)
    assert p.layers[(0, 0)] == 2
    assert sorted(v for c, v in p.layers.items() if c != (0, 0)) == [1] * 6
    assert offset(p, 1) == {(0, 0)}
    assert offset(p, 2) == frozenset()


def test_empty_and_disconnected_rejected():
    with pytest.raises(PolygonError):
        GridPolygon(HEX, frozenset())
    with pytest.raises(PolygonError):
        GridPolygon(HEX, frozenset({(0, 0), (5, 5)}))


def test_hex_ring_has_hole():
    ring = frozenset(neighbors((0, 0), HEX))
    p = GridPolygon(HEX, ring)
    assert not p.simple
    assert holes(ring, HEX) == [frozenset({(0, 0)})]


def test_touching_blocked_pair_is_one_hole():
    # two interior triangles meeting only at a corner form a single hole
    big = tri_hexagon(3)
    a = (0, 0)
    b = next(t for t in sorted(touching(a, TRI)) if big.layers[t] >= 2)
    assert big.layers[a] >= 2
    cells = big.free - {a, b}
    found = holes(cells, TRI)
    assert len(found) == 1 and found[0] == {a, b}


def test_hex_hole_groups_are_edge_connected():
    big = honeycomb(4)
    cells = big.free - {(0, 0), (2, 0)}
    assert len(holes(cells, HEX)) == 2


@pytest.mark.parametrize("kind", [HEX, TRI])
@pytest.mark.parametrize("width", [1, 2])
def test_thin_corridors_are_all_layer_one(kind, width):
    p = corridor(kind, width, 9)
    assert set(p.layers.values()) == {1}
    assert p.offset(1) == frozenset()


def test_narrow_passage_corridor_cells():
    p = corridor(HEX, 1, 6)
    assert p.narrow_passage_cells() == p.free


def test_narrow_passage_honeycomb_center():
    # removing the center leaves the ring at layer 1, where it already was
    p = honeycomb(1)
    rest = p.free - {(0, 0)}
    assert all(peel(rest, HEX)[c] == peel(p.free, HEX)[c] for c in rest)
    assert p.is_narrow_passage_cell((0, 0))


def test_narrow_passage_wide_corridor_middle():
    p = corridor(HEX, 3, 8)
    mid = [c for c in p.free if c[1] == 1 and p.layers[c] == 2]
    assert mid
    for c in mid:
        assert not p.is_narrow_passage_cell(c)


def test_narrow_passage_requires_member():
    with pytest.raises(PolygonError):
        honeycomb(1).is_narrow_passage_cell((9, 9))


def test_honeycomb_distances():
    p = honeycomb(1)
    assert p.diameter() == 2
    ring = p.free - {(0, 0)}
    assert bfs_distances(ring, (1, 0), HEX)[(-1, 0)] == 3


def test_tri_hexagon_offset_loses_edges():
    p = tri_hexagon(2)
    assert (p.C, p.E) == (24, 12)
    assert perimeter(p.offset(1), TRI) <= p.E - 6


@given(simple_polygons(40))
def test_layers_match_peeling_oracle(p):
    assert dict(p.layers) == peel(p.free, p.kind)


@given(simple_polygons(40))
def test_layer_one_iff_touching_outside(p):
    for c, l in p.layers.items():
        assert (l == 1) == any(n not in p.free for n in surrounding(c, p.kind))


@given(simple_polygons(40))
def test_offset_recursion(p):
    first = p.offset(1)
    if not first:
        return
    inner = layer_map(first, p.kind)
    for depth in range(1, max(p.layers.values()) + 1):
        assert p.offset(depth) == {c for c, l in inner.items() if l > depth - 1}


@given(st.sampled_from([HEX, TRI]), st.integers(2, 40), st.integers(0, 10**6))
def test_incremental_perimeter(kind, n, seed):
    # growing by one cell that shares k edges changes E by deg - 2k
    p = random_simple(kind, n, seed)
    order = sorted(p.free, key=lambda c: bfs_distances(p.free, min(p.free), kind)[c])
    grown = set()
    E = 0
    deg = 6 if kind is HEX else 3
    for c in order:
        k = sum(1 for m in neighbors(c, kind) if m in grown)
        E += deg - 2 * k
        grown.add(c)
        assert E == perimeter(grown, kind)
    assert E == p.E


@given(simple_polygons(40))
def test_perimeter_floor(p):
    assert p.E >= (6 if p.kind is HEX else 3)


@given(simple_polygons(40))
def test_random_simple_is_simple(p):
    assert p.simple
