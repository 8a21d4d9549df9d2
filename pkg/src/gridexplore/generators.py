"""Polygon families: corridors, honeycombs, random simple polygons,
the tight-ratio families, and exhaustive enumeration up to lattice symmetry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .grid import HEX, TRI, Cell, GridKind, is_up, neighbors, surrounding
from .polygon import GridPolygon, holes, is_connected, layer_map


class FamilyError(ValueError):
    pass


def corridor(kind: GridKind | str, width: int, length: int) -> GridPolygon:
    """A straight corridor ``width`` rows thick and ``length`` cells per row."""
    kind = GridKind.parse(kind)
    if width not in (1, 2, 3) or length < 1 or (kind is TRI and width > 1 and length < 2):
        raise FamilyError(f"infeasible corridor: width={width}, length={length}")
    cells = []
    for r in range(width):
        if kind is HEX:
            q0 = -(r // 2)
            cells += [(q0 + i, r) for i in range(length)]
        else:
            # each row starts one triangle further right so the rows interlock
            cells += [(i + r, r) for i in range(length)]
    return GridPolygon(kind, frozenset(cells))


def honeycomb(radius: int) -> GridPolygon:
    """All hex cells within ``radius`` steps of the origin."""
    if radius < 0:
        raise FamilyError("radius must be non-negative")
    cells = [
        (q, r)
        for q in range(-radius, radius + 1)
        for r in range(-radius, radius + 1)
        if abs(q + r) <= radius
    ]
    return GridPolygon(HEX, frozenset(cells))


def tri_hexagon(side: int) -> GridPolygon:
    """The hexagon of ``6 * side**2`` triangles around a lattice point."""
    if side < 1:
        raise FamilyError("side must be positive")
    span = 2 * side + 2
    cells = [
        (x, y)
        for x in range(-span, span + 1)
        for y in range(-side - 1, side + 1)
        if all(max(abs(i), abs(j), abs(i + j)) <= side for i, j in _tri_vertices((x, y)))
    ]
    return GridPolygon(TRI, frozenset(cells))


def random_simple(kind: GridKind | str, n: int, seed: int) -> GridPolygon:
    """Grow a simple polygon of ``n`` cells from the origin.

    Each step adds a uniformly chosen outside cell edge-adjacent to the
    polygon, rejecting any that would enclose a hole.
    """
    kind = GridKind.parse(kind)
    if n < 1:
        raise FamilyError("need at least one cell")
    rng = random.Random(seed)
    cells = {(0, 0)}
    frontier = set(neighbors((0, 0), kind))
    while len(cells) < n:
        if not frontier:
            raise FamilyError("growth got stuck")
        c = rng.choice(sorted(frontier))
        frontier.discard(c)
        if _closes_hole(cells, c, kind):
            continue
        cells.add(c)
        frontier.update(m for m in neighbors(c, kind) if m not in cells)
    return GridPolygon(kind, frozenset(cells))


def _closes_hole(cells: set[Cell], c: Cell, kind: GridKind) -> bool:
    # Cheap local test first: if the blocked cells around c stay connected
    # among themselves, every outside route through c can detour around it.
    ring = set(surrounding(c, kind))
    blocked_ring = {x for x in ring if x not in cells}
    if not blocked_ring:
        return True
    groups = 0
    seen: set[Cell] = set()
    for x in blocked_ring:
        if x in seen:
            continue
        groups += 1
        stack = [x]
        seen.add(x)
        while stack:
            y = stack.pop()
            for z in surrounding(y, kind):
                if z in blocked_ring and z not in seen:
                    seen.add(z)
                    stack.append(z)
    if groups == 1:
        return False
    return bool(holes(cells | {c}, kind))


def random_polygon(kind: GridKind | str, n: int, seed: int) -> GridPolygon:
    """Random polygon of ``n`` cells that may contain holes.

    A compact blob slightly larger than ``n`` is grown first; then interior
    cells are knocked out at random (punching holes) while the shape stays
    edge-connected, and any remaining excess is shaved off the boundary.
    """
    kind = GridKind.parse(kind)
    if n < 1:
        raise FamilyError("need at least one cell")
    rng = random.Random(seed)
    extra = rng.randint(0, max(0, n // 6))
    cells = {(0, 0)}
    frontier = set(neighbors((0, 0), kind))
    while len(cells) < n + extra:
        options = sorted(frontier)
        # favour cells with many free neighbors so that interiors form
        weights = [1 + 3 * sum(m in cells for m in neighbors(c, kind)) for c in options]
        c = rng.choices(options, weights)[0]
        frontier.discard(c)
        cells.add(c)
        frontier.update(m for m in neighbors(c, kind) if m not in cells)

    def removable(c: Cell) -> bool:
        rest = cells - {c}
        return is_connected(rest, kind)

    lay = layer_map(cells, kind)
    inner = [c for c in sorted(cells) if lay[c] >= 2]
    rng.shuffle(inner)
    for c in inner:
        if len(cells) == n:
            break
        if c in cells and removable(c):
            cells.discard(c)
    while len(cells) > n:
        lay = layer_map(cells, kind)
        edge = [c for c in sorted(cells) if lay[c] == 1 and removable(c)]
        cells.discard(rng.choice(edge or [c for c in sorted(cells) if removable(c)]))
    return GridPolygon(kind, frozenset(cells))


def random_thick(kind: GridKind | str, n: int, seed: int) -> GridPolygon:
    """A random simple polygon grown to ``n`` cells and then dilated once.

    Dilation adds every cell sharing an edge or corner with the polygon and
    fills any enclosed blocked cells, which yields wide, blobby shapes.
    """
    kind = GridKind.parse(kind)
    core = random_simple(kind, n, seed).free
    cells = set(core)
    for c in core:
        cells.update(surrounding(c, kind))
    for hole in holes(cells, kind):
        cells |= hole
    return GridPolygon(kind, frozenset(cells))


def comp_hex(length: int) -> GridPolygon:
    """Width-3 hex corridor where SmartDFS needs 4 steps per 3 middle cells.

    A single tip cell, ``length`` middle rows of three cells, and two closing
    rows of three. The tip is the lexicographically smallest cell, so the
    default start lies there.
    """
    if length < 1:
        raise FamilyError("length must be positive")
    cells = [(0, 1)]
    for r in range(1, length + 3):
        cells += [(r, -(r // 2) + i) for i in range(3)]
    return GridPolygon(HEX, frozenset(cells))


def comp_tri(rows: int) -> GridPolygon:
    """Triangle corridor of ``2 * rows`` middle rows of six cells, capped by
    rows of five cells at both ends."""
    if rows < 1:
        raise FamilyError("rows must be positive")
    top = 2 * rows + 1
    cells = []
    for y in range(top + 1):
        if y in (0, top):
            cells += [(1 + i, y) for i in range(5)]
        else:
            cells += [(i, y) for i in range(6)]
    return GridPolygon(TRI, frozenset(cells))


# --- symmetry and enumeration -------------------------------------------

def _hex_transforms(c: Cell) -> list[Cell]:
    out = []
    q, r = c
    for _ in range(6):
        out.append((q, r))
        out.append((r, q))
        q, r = -r, q + r
    return out


def _tri_vertices(c: Cell) -> tuple[tuple[int, int], ...]:
    x, y = c
    if is_up(c):
        pts = [(x - 1, y), (x + 1, y), (x, y + 1)]
    else:
        pts = [(x - 1, y + 1), (x + 1, y + 1), (x, y)]
    # (2 * horizontal, row) -> lattice axial (i, j)
    return tuple(((u - v - 1) // 2, v) for u, v in pts)


def _tri_from_vertices(pts) -> Cell:
    uv = sorted(((2 * i + j + 1, j) for i, j in pts), key=lambda p: p[1])
    if uv[0][1] == uv[1][1]:
        apex = uv[2]
        return (apex[0], apex[1] - 1)
    bottom = uv[0]
    return (bottom[0], bottom[1])


def _tri_transforms(c: Cell) -> list[Cell]:
    verts = list(_tri_vertices(c))
    out = []
    for _ in range(6):
        out.append(_tri_from_vertices(verts))
        out.append(_tri_from_vertices([(i + j, -j) for i, j in verts]))
        verts = [(-j, i + j) for i, j in verts]
    return out


def _normalize(cells, kind: GridKind) -> tuple[Cell, ...]:
    mx = min(c[0] for c in cells)
    my = min(c[1] for c in cells)
    if kind is TRI and (mx + my) % 2:
        mx -= 1
    return tuple(sorted((x - mx, y - my) for x, y in cells))


def canonical_form(cells, kind: GridKind) -> tuple[Cell, ...]:
    """Smallest normalized image of the cell set over the 12 lattice symmetries."""
    kind = GridKind.parse(kind)
    transform = _hex_transforms if kind is HEX else _tri_transforms
    images = [transform(c) for c in cells]
    return min(_normalize([img[k] for img in images], kind) for k in range(12))


def enumerate_polyforms(kind: GridKind | str, max_cells: int) -> Iterator[list[tuple[Cell, ...]]]:
    """Yield, for n = 1..max_cells, all connected cell sets of size n up to symmetry."""
    kind = GridKind.parse(kind)
    level = {canonical_form([(0, 0)], kind)}
    n = 1
    while True:
        yield sorted(level)
        if n == max_cells:
            return
        nxt = set()
        for shape in level:
            present = set(shape)
            grow = {m for c in shape for m in neighbors(c, kind) if m not in present}
            for m in grow:
                nxt.add(canonical_form(shape + (m,), kind))
        level = nxt
        n += 1


def enumerate_simple(kind: GridKind | str, max_cells: int, min_cells: int = 1) -> list[GridPolygon]:
    """All simple polygons with ``min_cells..max_cells`` cells, one per symmetry class."""
    kind = GridKind.parse(kind)
    out = []
    for n, level in enumerate(enumerate_polyforms(kind, max_cells), start=1):
        if n < min_cells:
            continue
        for shape in level:
            if not holes(shape, kind):
                out.append(GridPolygon(kind, frozenset(shape)))
    return out


@dataclass(frozen=True)
class FamilySpec:
    family: str
    kind: GridKind = HEX
    width: int = 1
    length: int = 1
    radius: int = 1
    cells: int = 1
    seed: int = 0
    rows: int = 1


def generate(spec: FamilySpec) -> GridPolygon:
    f = spec.family
    if f == "corridor":
        return corridor(spec.kind, spec.width, spec.length)
    if f == "honeycomb":
        return honeycomb(spec.radius)
    if f == "random":
        return random_simple(spec.kind, spec.cells, spec.seed)
    if f == "random_holes":
        return random_polygon(spec.kind, spec.cells, spec.seed)
    if f == "thick":
        return random_thick(spec.kind, spec.cells, spec.seed)
    if f == "comp_hex":
        return comp_hex(spec.length)
    if f == "comp_tri":
        return comp_tri(spec.rows)
    raise FamilyError(f"unknown family: {f!r}")
