"""Grid polygons and their derived measures: area, perimeter, holes, layers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .grid import Cell, GridKind, check_cell, neighbors, surrounding


class PolygonError(ValueError):
    pass


def components(cells: Iterable[Cell], kind: GridKind) -> list[frozenset[Cell]]:
    """Edge-connected components, ordered by their smallest cell."""
    remaining = set(cells)
    found = []
    for seed in sorted(remaining):
        if seed not in remaining:
            continue
        comp = {seed}
        remaining.discard(seed)
        queue = deque([seed])
        while queue:
            c = queue.popleft()
            for n in neighbors(c, kind):
                if n in remaining:
                    remaining.discard(n)
                    comp.add(n)
                    queue.append(n)
        found.append(frozenset(comp))
    return found


def is_connected(cells: Iterable[Cell], kind: GridKind) -> bool:
    cells = set(cells)
    return len(cells) > 0 and len(components(cells, kind)) == 1


def perimeter(cells: Iterable[Cell], kind: GridKind) -> int:
    """Number of edges between a cell of the set and a cell outside it."""
    cells = cells if isinstance(cells, (set, frozenset)) else set(cells)
    return sum(1 for c in cells for n in neighbors(c, kind) if n not in cells)


def layer_map(cells: Iterable[Cell], kind: GridKind) -> dict[Cell, int]:
    """Peel boundary shells off an arbitrary cell set.

    A cell is on the boundary when it shares an edge or a corner with a cell
    outside the set; on hex grids only edges can be shared.
    """
    cells = cells if isinstance(cells, (set, frozenset)) else set(cells)
    layer: dict[Cell, int] = {}
    queue: deque[Cell] = deque()
    for c in sorted(cells):
        if any(n not in cells for n in surrounding(c, kind)):
            layer[c] = 1
            queue.append(c)
    while queue:
        c = queue.popleft()
        for n in surrounding(c, kind):
            if n in cells and n not in layer:
                layer[n] = layer[c] + 1
                queue.append(n)
    return layer


@dataclass(frozen=True)
class Metrics:
    C: int
    E: int


@dataclass(frozen=True, eq=True)
class GridPolygon:
    """A nonempty, edge-connected set of free cells on one grid."""

    kind: GridKind
    free: frozenset[Cell]

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", GridKind.parse(self.kind))
        object.__setattr__(self, "free", frozenset(check_cell(tuple(c)) for c in self.free))
        if not self.free:
            raise PolygonError("polygon has no cells")
        if not is_connected(self.free, self.kind):
            raise PolygonError("cell set is not edge-connected")

    @classmethod
    def from_cells(cls, kind: GridKind | str, cells: Iterable[Cell]) -> "GridPolygon":
        return cls(GridKind.parse(kind), frozenset(cells))

    def __contains__(self, c: object) -> bool:
        return c in self.free

    def __len__(self) -> int:
        return len(self.free)

    def __iter__(self):
        return iter(sorted(self.free))

    @property
    def C(self) -> int:
        return len(self.free)

    @cached_property
    def E(self) -> int:
        return perimeter(self.free, self.kind)

    def metrics(self) -> Metrics:
        return Metrics(self.C, self.E)

    def neighbors(self, c: Cell) -> list[Cell]:
        """Free edge-neighbors of ``c`` in clockwise order."""
        return [n for n in neighbors(c, self.kind) if n in self.free]

    @cached_property
    def layers(self) -> Mapping[Cell, int]:
        return layer_map(self.free, self.kind)

    def offset(self, depth: int) -> frozenset[Cell]:
        """Cells deeper than ``depth`` layers; may be empty or disconnected."""
        if depth < 0:
            raise ValueError("offset depth must be non-negative")
        return frozenset(c for c, l in self.layers.items() if l > depth)

    @cached_property
    def simple(self) -> bool:
        return not holes(self.free, self.kind)

    def is_narrow_passage_cell(self, c: Cell) -> bool:
        """True iff removing ``c`` leaves every other cell's layer unchanged."""
        if c not in self.free:
            raise PolygonError(f"{c} is not a cell of the polygon")
        rest = self.free - {c}
        before = self.layers
        after = layer_map(rest, self.kind)
        return all(after[x] == before[x] for x in rest)

    def narrow_passage_cells(self) -> frozenset[Cell]:
        return frozenset(c for c in self.free if self.is_narrow_passage_cell(c))

    def diameter(self) -> int:
        """Largest shortest-path distance between two cells."""
        best = 0
        for s in self.free:
            dist = bfs_distances(self.free, s, self.kind)
            best = max(best, max(dist.values()))
        return best


def metrics(poly: GridPolygon) -> Metrics:
    return poly.metrics()


def layers(poly: GridPolygon) -> Mapping[Cell, int]:
    return poly.layers


def offset(poly: GridPolygon, depth: int) -> frozenset[Cell]:
    return poly.offset(depth)


def is_simple(poly: GridPolygon) -> bool:
    return poly.simple


def is_narrow_passage_cell(poly: GridPolygon, c: Cell) -> bool:
    return poly.is_narrow_passage_cell(c)


def holes(cells: Iterable[Cell], kind: GridKind) -> list[frozenset[Cell]]:
    """Blocked cell groups that cannot reach the unbounded outside.

    Blocked cells connect through edges and, on triangle grids, corners.
    The outside is the border of a bounding box inflated by two cells.
    """
    cells = cells if isinstance(cells, (set, frozenset)) else set(cells)
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    x0, x1 = min(xs) - 2, max(xs) + 2
    y0, y1 = min(ys) - 2, max(ys) + 2

    def inside(c: Cell) -> bool:
        return x0 <= c[0] <= x1 and y0 <= c[1] <= y1

    blocked = {(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)} - cells
    outside = {c for c in blocked if c[0] in (x0, x1) or c[1] in (y0, y1)}
    queue = deque(outside)
    while queue:
        c = queue.popleft()
        for n in surrounding(c, kind):
            if inside(n) and n in blocked and n not in outside:
                outside.add(n)
                queue.append(n)
    enclosed = blocked - outside
    if not enclosed:
        return []
    groups = []
    remaining = set(enclosed)
    for seed in sorted(enclosed):
        if seed not in remaining:
            continue
        group = {seed}
        remaining.discard(seed)
        queue = deque([seed])
        while queue:
            c = queue.popleft()
            for n in surrounding(c, kind):
                if n in remaining:
                    remaining.discard(n)
                    group.add(n)
                    queue.append(n)
        groups.append(frozenset(group))
    return groups


def bfs_distances(cells: Iterable[Cell], source: Cell, kind: GridKind) -> dict[Cell, int]:
    cells = cells if isinstance(cells, (set, frozenset)) else set(cells)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        c = queue.popleft()
        for n in neighbors(c, kind):
            if n in cells and n not in dist:
                dist[n] = dist[c] + 1
                queue.append(n)
    return dist
