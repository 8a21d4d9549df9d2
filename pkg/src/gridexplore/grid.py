"""Lattice geometry for hexagonal and triangular grids.

Cells are plain integer tuples. Hex cells use pointy-top axial coordinates
``(q, r)`` with ``r`` growing downwards on screen. Triangle cells are
``(x, y)`` with ``y`` growing upwards; a triangle points up iff ``x + y``
is even.

Neighbor lists are always returned in the canonical clockwise order, which
is what the left-hand rule of the explorers relies on.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import NamedTuple

Cell = tuple[int, int]

# Coordinates beyond this magnitude are rejected rather than silently accepted.
COORD_LIMIT = 1 << 30


class GridKind(str, Enum):
    HEX = "hex"
    TRI = "tri"

    @classmethod
    def parse(cls, value: "str | GridKind") -> "GridKind":
        if isinstance(value, GridKind):
            return value
        if not isinstance(value, str):
            raise ValueError(f"unknown grid kind: {value!r}")
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise ValueError(f"unknown grid kind: {value!r}") from None


HEX = GridKind.HEX
TRI = GridKind.TRI

# NE, E, SE, SW, W, NW
HEX_DIRECTIONS: tuple[Cell, ...] = ((1, -1), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1))
# up triangle: E, S, W
TRI_UP_DIRECTIONS: tuple[Cell, ...] = ((1, 0), (0, -1), (-1, 0))
# down triangle: N, E, W
TRI_DOWN_DIRECTIONS: tuple[Cell, ...] = ((0, 1), (1, 0), (-1, 0))


class Move(NamedTuple):
    """A single step between two edge-adjacent cells."""

    src: Cell
    dst: Cell

    def reverse(self) -> "Move":
        return Move(self.dst, self.src)


def is_up(c: Cell) -> bool:
    """Orientation of a triangle cell; derived from the coordinates only."""
    return (c[0] + c[1]) % 2 == 0


def check_cell(c: Cell) -> Cell:
    q, r = c
    if abs(q) >= COORD_LIMIT or abs(r) >= COORD_LIMIT:
        raise OverflowError(f"cell coordinate out of range: {c}")
    return c


def degree(kind: GridKind) -> int:
    return 6 if kind is HEX else 3


def neighbors(c: Cell, kind: GridKind) -> list[Cell]:
    """All edge-neighbors of ``c`` in canonical clockwise order.

    Membership in a polygon is not checked.
    """
    q, r = c
    if kind is HEX:
        dirs = HEX_DIRECTIONS
    elif kind is TRI:
        dirs = TRI_UP_DIRECTIONS if is_up(c) else TRI_DOWN_DIRECTIONS
    else:
        return neighbors(c, GridKind.parse(kind))
    return [(q + dq, r + dr) for dq, dr in dirs]


def are_adjacent(a: Cell, b: Cell, kind: GridKind) -> bool:
    return b in neighbors(a, kind)


def _tri_corners(c: Cell) -> list[tuple[int, int]]:
    # Lattice points as (2 * horizontal position, row height).
    x, y = c
    if is_up(c):
        return [(x - 1, y), (x + 1, y), (x, y + 1)]
    return [(x - 1, y + 1), (x + 1, y + 1), (x, y)]


def _tri_cells_at_corner(p: tuple[int, int]) -> list[Cell]:
    u, v = p
    candidates = [(u - 1, v), (u + 1, v), (u, v), (u - 1, v - 1), (u + 1, v - 1), (u, v - 1)]
    return [cand for cand in candidates if p in _tri_corners(cand)]


def touching(c: Cell, kind: GridKind) -> set[Cell]:
    """Cells sharing a corner but no edge with ``c``; empty on hex grids."""
    kind = GridKind.parse(kind)
    if kind is HEX:
        return set()
    around: set[Cell] = set()
    for p in _tri_corners(c):
        around.update(_tri_cells_at_corner(p))
    around.discard(c)
    return around - set(neighbors(c, kind))


def surrounding(c: Cell, kind: GridKind) -> list[Cell]:
    """Edge-neighbors followed by corner-touching cells."""
    kind = GridKind.parse(kind)
    if kind is HEX:
        return neighbors(c, kind)
    return neighbors(c, kind) + sorted(touching(c, kind))


def clockwise_scan(c: Cell, arrived_from: Cell, kind: GridKind) -> list[Cell]:
    """Neighbors of ``c`` clockwise, starting with the cell behind the agent."""
    ring = neighbors(c, kind)
    try:
        i = ring.index(arrived_from)
    except ValueError:
        raise ValueError(f"{arrived_from} is not adjacent to {c}") from None
    return ring[i:] + ring[:i]


def next_clockwise(c: Cell, n: Cell, kind: GridKind) -> Cell:
    return clockwise_scan(c, n, kind)[1]


def center(c: Cell, kind: GridKind) -> tuple[float, float]:
    """Cell center in screen coordinates (y down), unit edge length."""
    kind = GridKind.parse(kind)
    if kind is HEX:
        q, r = c
        return (3 ** 0.5 * (q + r / 2), 1.5 * r)
    x, y = c
    h = 3 ** 0.5 / 2
    # centroid sits a third of the height above the base for up triangles
    cy = y * h + (h / 3 if is_up(c) else 2 * h / 3)
    return (x / 2, -cy)


def corners(c: Cell, kind: GridKind) -> list[tuple[float, float]]:
    """Polygon vertices of a cell in screen coordinates, clockwise on screen."""
    kind = GridKind.parse(kind)
    if kind is HEX:
        cx, cy = center(c, kind)
        pts = []
        for i in range(6):
            a = math.radians(60 * i - 90)
            pts.append((cx + math.cos(a), cy + math.sin(a)))
        return pts
    x, y = c
    h = 3 ** 0.5 / 2
    left = (x - 1) / 2
    if is_up(c):
        return [(left, -y * h), (left + 0.5, -(y + 1) * h), (left + 1, -y * h)]
    return [(left, -(y + 1) * h), (left + 1, -(y + 1) * h), (left + 0.5, -y * h)]
