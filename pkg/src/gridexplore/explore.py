"""Online exploration strategies: plain DFS and SmartDFS.

Both explorers only use what an agent could know online: the cells it has
visited, and which neighbors of its current cell are free. Layer numbers are
read from the polygon's layer map when a cell is first visited; on the cells
an agent has actually seen they coincide with what it could infer itself.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .grid import Cell, GridKind, HEX, clockwise_scan, neighbors
from .polygon import GridPolygon


class ExplorationError(ValueError):
    pass


class ComponentType(enum.Enum):
    I = "I"  # completely surrounded by the split layer
    II = "II"  # not surrounded
    III = "III"  # partially surrounded

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SplitEvent:
    at: Cell
    layer: int
    components: tuple[frozenset[Cell], ...]
    types: tuple[ComponentType, ...]
    order: tuple[int, ...]


@dataclass(frozen=True)
class ExplorationTrace:
    kind: GridKind
    start: Cell
    walk: tuple[Cell, ...]
    strategy: str = "smartdfs"
    events: tuple[SplitEvent, ...] = ()
    visit_layers: dict[Cell, int] = field(default_factory=dict, compare=False)

    @property
    def steps(self) -> int:
        return len(self.walk) - 1

    @property
    def S(self) -> int:
        return self.steps

    def moves(self) -> list[tuple[Cell, Cell]]:
        return list(zip(self.walk, self.walk[1:]))


def shortest_path_over(cells: Iterable[Cell], a: Cell, b: Cell, kind: GridKind) -> list[Cell]:
    """A shortest path from ``a`` to ``b`` that stays inside ``cells``.

    Ties are broken by the canonical neighbor order, so the result is
    deterministic.
    """
    cells = cells if isinstance(cells, (set, frozenset, dict)) else set(cells)
    if a not in cells or b not in cells:
        raise ExplorationError(f"path endpoints must lie in the cell set: {a} -> {b}")
    if a == b:
        return [a]
    if b in neighbors(a, kind):
        return [a, b]
    parent: dict[Cell, Cell | None] = {a: None}
    queue = deque([a])
    while queue:
        c = queue.popleft()
        for n in neighbors(c, kind):
            if n in cells and n not in parent:
                parent[n] = c
                if n == b:
                    path = [b]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                queue.append(n)
    raise ExplorationError(f"{b} is unreachable from {a}")


def split_components(
    poly: GridPolygon, visited: Iterable[Cell], c: Cell
) -> list[frozenset[Cell]]:
    """Unvisited components that border ``c`` once ``c`` itself is visited.

    Components not touching ``c`` are ignored: they were already separate
    before ``c`` was entered. The list is ordered by the clockwise position
    of each component's first neighbor of ``c``.
    """
    seen = set(visited)
    seen.add(c)
    kind = poly.kind
    found: list[frozenset[Cell]] = []
    claimed: set[Cell] = set()
    for n in neighbors(c, kind):
        if n not in poly.free or n in seen or n in claimed:
            continue
        comp = {n}
        queue = deque([n])
        while queue:
            x = queue.popleft()
            for m in neighbors(x, kind):
                if m in poly.free and m not in seen and m not in comp:
                    comp.add(m)
                    queue.append(m)
        claimed |= comp
        found.append(frozenset(comp))
    return found


def classify_component(
    comp: Iterable[Cell],
    layer: int,
    visited: Iterable[Cell],
    layers: dict[Cell, int],
    c: Cell,
    kind: GridKind,
) -> ComponentType:
    """Type of an unvisited component at a split cell ``c`` in ``layer``.

    I: every cell lies deeper than ``layer``. III: a visited cell of the
    same layer other than ``c`` borders the component. II: otherwise.
    """
    comp = comp if isinstance(comp, (set, frozenset)) else set(comp)
    if all(layers[x] > layer for x in comp):
        return ComponentType.I
    visited = visited if isinstance(visited, (set, frozenset, dict)) else set(visited)
    for x in comp:
        for n in neighbors(x, kind):
            if n != c and n in visited and layers.get(n) == layer:
                return ComponentType.III
    return ComponentType.II


def choose_component_order(
    types: Sequence[ComponentType], first_possible: int = 0
) -> list[int]:
    """Order in which to finish the components found at a split cell.

    ``types`` are listed in left-hand (clockwise scan) order. A type III
    component goes last. Without one, the component the left-hand rule would
    enter first (index ``first_possible``) is postponed to the end.
    """
    idx = list(range(len(types)))
    if len(idx) < 2:
        return idx
    third = [i for i in idx if types[i] is ComponentType.III]
    if len(third) > 1:
        raise ExplorationError("more than one component of type III at a split cell")
    if third:
        return [i for i in idx if i != third[0]] + third
    return [i for i in idx if i != first_possible] + [first_possible]


def start_back_cell(poly: GridPolygon, s: Cell) -> Cell:
    """The blocked neighbor the agent initially has at its back."""
    ring = neighbors(s, poly.kind)
    if poly.kind is HEX:
        # the back cell of heading i is the one opposite to direction i
        order = [ring[(i + 3) % 6] for i in range(6)]
    else:
        order = ring
    for b in order:
        if b not in poly.free:
            return b
    raise ExplorationError(f"start cell {s} has no blocked neighbor")


def _check_start(poly: GridPolygon, s: Cell) -> None:
    if s not in poly.free:
        raise ExplorationError(f"start cell {s} is not in the polygon")


def default_start(poly: GridPolygon) -> Cell:
    """Lexicographically smallest cell; it always has a blocked neighbor."""
    return min(poly.free)


def explore_dfs(poly: GridPolygon, s: Cell | None = None) -> ExplorationTrace:
    """Depth-first exploration with physical backtracking; always 2C - 2 steps."""
    s = default_start(poly) if s is None else tuple(s)
    _check_start(poly, s)
    kind = poly.kind
    ring = neighbors(s, kind)
    blocked = [b for b in ring if b not in poly.free]
    back = start_back_cell(poly, s) if blocked else ring[0]

    visited = {s}
    walk = [s]
    # frame: (cell, parent, scan order, next index)
    stack: list[list] = [[s, None, clockwise_scan(s, back, kind), 0]]
    while stack:
        frame = stack[-1]
        cell, parent, scan, i = frame
        while i < len(scan) and (scan[i] not in poly.free or scan[i] in visited):
            i += 1
        if i == len(scan):
            stack.pop()
            if parent is not None:
                walk.append(parent)
            continue
        frame[3] = i + 1
        nxt = scan[i]
        visited.add(nxt)
        walk.append(nxt)
        stack.append([nxt, cell, clockwise_scan(nxt, cell, kind), 0])
    layers = poly.layers
    return ExplorationTrace(
        kind, s, tuple(walk), "dfs", (), {c: layers[c] for c in visited}
    )


class _SmartDFS:
    def __init__(self, poly: GridPolygon, s: Cell):
        self.poly = poly
        self.kind = poly.kind
        self.layers = poly.layers
        self.s = s
        self.visited: dict[Cell, int] = {}
        self.walk: list[Cell] = [s]
        self.events: list[SplitEvent] = []
        self.stack: list[list] = []

    def run(self) -> ExplorationTrace:
        back = start_back_cell(self.poly, self.s)
        self.enter(self.s, back)
        while self.stack:
            frame = self.stack[-1]
            base, order, i = frame
            while i < len(order) and order[i] in self.visited:
                i += 1
            if i == len(order):
                self.stack.pop()
                continue
            frame[2] = i + 1
            nxt = order[i]
            self.walk_to(base)
            self.walk.append(nxt)
            self.enter(nxt, base)
        self.walk_to(self.s)
        return ExplorationTrace(
            self.kind, self.s, tuple(self.walk), "smartdfs", tuple(self.events), dict(self.visited)
        )

    def walk_to(self, target: Cell) -> None:
        path = shortest_path_over(self.visited, self.walk[-1], target, self.kind)
        self.walk.extend(path[1:])

    def enter(self, cell: Cell, arrived_from: Cell) -> None:
        layer = self.layers[cell]
        self.visited[cell] = layer
        scan = [n for n in clockwise_scan(cell, arrived_from, self.kind) if n in self.poly.free]
        comps = split_components(self.poly, self.visited, cell)
        if len(comps) < 2:
            self.stack.append([cell, scan, 0])
            return

        types = tuple(
            classify_component(k, layer, self.visited, self.layers, cell, self.kind)
            for k in comps
        )
        which = {}
        for i, k in enumerate(comps):
            for n in scan:
                if n in k:
                    which[n] = i
        # components as they are met by the clockwise scan
        met = []
        for n in scan:
            if n in which and which[n] not in met:
                met.append(which[n])
        comps = tuple(comps[i] for i in met)
        types = tuple(types[i] for i in met)
        which = {n: met.index(i) for n, i in which.items()}

        order = choose_component_order(types)
        self.events.append(SplitEvent(cell, layer, comps, types, tuple(order)))
        candidates = [n for k in order for n in scan if which.get(n) == k]
        self.stack.append([cell, candidates, 0])


def explore_smartdfs(poly: GridPolygon, s: Cell | None = None) -> ExplorationTrace:
    """SmartDFS on a simple polygon from a boundary cell ``s``."""
    s = default_start(poly) if s is None else tuple(s)
    _check_start(poly, s)
    if not poly.simple:
        raise ExplorationError("polygon not simple")
    if all(n in poly.free for n in neighbors(s, poly.kind)):
        raise ExplorationError(f"start cell {s} is not a boundary cell")
    return _SmartDFS(poly, s).run()


def explore(poly: GridPolygon, strategy: str = "smartdfs", s: Cell | None = None) -> ExplorationTrace:
    if strategy == "dfs":
        return explore_dfs(poly, s)
    if strategy == "smartdfs":
        return explore_smartdfs(poly, s)
    raise ValueError(f"unknown strategy: {strategy!r}")
