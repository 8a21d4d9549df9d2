"""Exact offline baselines for the covering tour.

The optimum is a closed walk that visits every cell at least once. Replacing
each leg between first visits by a shortest path shows it equals a
travelling-salesman tour over the metric closure, which Held-Karp solves
exactly. A much dumber walk search is kept separately as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .explore import ExplorationTrace, shortest_path_over
from .grid import Cell
from .polygon import GridPolygon, bfs_distances

DEFAULT_CEILING = 18


class TourTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class TourSolution:
    start: Cell
    length: int
    walk: tuple[Cell, ...]
    method: str = "held-karp"

    @property
    def S_opt(self) -> int:
        return self.length


def all_pairs_distances(poly: GridPolygon) -> tuple[list[Cell], np.ndarray]:
    """Cells in sorted order and their BFS distance matrix."""
    cells = sorted(poly.free)
    index = {c: i for i, c in enumerate(cells)}
    dist = np.zeros((len(cells), len(cells)), dtype=np.int32)
    for i, c in enumerate(cells):
        for other, d in bfs_distances(poly.free, c, poly.kind).items():
            dist[i, index[other]] = d
    return cells, dist


def _held_karp(dist: np.ndarray, start: int) -> tuple[int, list[int]]:
    n = len(dist)
    if n == 1:
        return 0, [start]
    others = [i for i in range(n) if i != start]
    m = len(others)
    d = dist[np.ix_(others, others)].astype(np.int64)
    d_from = dist[start, others].astype(np.int64)
    d_to = dist[others, start].astype(np.int64)

    big = np.iinfo(np.int64).max // 4
    size = 1 << m
    cost = np.full((size, m), big, dtype=np.int64)
    parent = np.full((size, m), -1, dtype=np.int8 if m < 127 else np.int16)
    for j in range(m):
        cost[1 << j, j] = d_from[j]

    masks = np.arange(size, dtype=np.int64)
    popcount = np.zeros(size, dtype=np.int64)
    for j in range(m):
        popcount += (masks >> j) & 1
    for k in range(2, m + 1):
        layer = masks[popcount == k]
        for j in range(m):
            sel = layer[(layer >> j) & 1 == 1]
            prev = sel ^ (1 << j)
            cand = cost[prev] + d[:, j][None, :]
            best = cand.argmin(axis=1)
            cost[sel, j] = cand[np.arange(len(sel)), best]
            parent[sel, j] = best

    full = size - 1
    closing = cost[full] + d_to
    last = int(closing.argmin())
    total = int(closing[last])

    order = []
    mask, j = full, last
    while j >= 0:
        order.append(others[j])
        pj = int(parent[mask, j])
        mask ^= 1 << j
        j = pj
    order.reverse()
    return total, [start] + order + [start]


def _expand(poly: GridPolygon, stops: list[Cell]) -> tuple[Cell, ...]:
    walk = [stops[0]]
    for a, b in zip(stops, stops[1:]):
        walk.extend(shortest_path_over(poly.free, a, b, poly.kind)[1:])
    return tuple(walk)


def strip_leaves(poly: GridPolygon) -> tuple[frozenset[Cell], list[tuple[Cell, Cell]]]:
    """Repeatedly remove cells with a single free neighbor.

    Returns the remaining core and the removed ``(leaf, anchor)`` pairs in
    removal order. Every covering walk enters a leaf from its anchor and
    leaves the same way, so each leaf adds exactly two steps to the optimum.
    """
    cells = set(poly.free)
    deg = {c: len(poly.neighbors(c)) for c in cells}
    removed: list[tuple[Cell, Cell]] = []
    queue = sorted(c for c in cells if deg[c] == 1)
    while queue and len(cells) > 1:
        leaf = queue.pop(0)
        if leaf not in cells or deg[leaf] != 1:
            continue
        anchor = next(m for m in poly.neighbors(leaf) if m in cells)
        cells.discard(leaf)
        removed.append((leaf, anchor))
        deg[anchor] -= 1
        if deg[anchor] == 1:
            queue.append(anchor)
    return frozenset(cells), removed


def optimal_tour(
    poly: GridPolygon, s: Cell | None = None, ceiling: int = DEFAULT_CEILING,
    hamiltonian_budget: int = 200_000, reduce: bool = True,
) -> TourSolution:
    """Shortest closed walk from ``s`` that visits every cell.

    The optimum does not depend on the start, since a covering closed walk
    can be rotated to begin anywhere. With ``reduce`` set, leaf cells are
    stripped first and the core is solved; their detours are spliced back
    afterwards. Cores up to ``ceiling`` cells are solved by Held-Karp. Larger
    ones are only answered when a Hamiltonian cycle is found, which
    certifies the trivial lower bound as optimal; otherwise
    ``TourTooLarge`` is raised.
    """
    s = min(poly.free) if s is None else tuple(s)
    if s not in poly.free:
        raise ValueError(f"start cell {s} is not in the polygon")
    core, removed = strip_leaves(poly) if reduce else (poly.free, [])
    core_poly = GridPolygon(poly.kind, core) if removed else poly
    c0 = s if s in core else min(core)
    if len(core) <= ceiling:
        cells, dist = all_pairs_distances(core_poly)
        total, order = _held_karp(dist, cells.index(c0))
        walk = list(_expand(core_poly, [cells[i] for i in order]))
        assert len(walk) - 1 == total
        method = "held-karp"
    else:
        cycle = hamiltonian_cycle(core_poly, c0, budget=hamiltonian_budget)
        if cycle is None:
            raise TourTooLarge(
                f"{len(core)} core cells exceed the exact-solver ceiling of {ceiling} "
                "and no Hamiltonian cycle certificate was found"
            )
        walk = list(cycle)
        method = "hamiltonian"
    for leaf, anchor in reversed(removed):
        i = walk.index(anchor)
        walk[i + 1:i + 1] = [leaf, anchor]
    if len(walk) > 1:
        i = walk.index(s)
        walk = walk[i:-1] + walk[:i] + [s]
    return TourSolution(s, len(walk) - 1, tuple(walk), method)


def hamiltonian_cycle(poly: GridPolygon, s: Cell | None = None, budget: int = 200_000) -> list[Cell] | None:
    """Search for a closed walk visiting every cell exactly once.

    Returns the cycle starting and ending at ``s``, or None when none exists
    or the node budget runs out.
    """
    s = min(poly.free) if s is None else tuple(s)
    n = poly.C
    if n == 1:
        return [s]
    if n == 2:
        return None
    adj = {c: poly.neighbors(c) for c in poly.free}
    if any(len(v) < 2 for v in adj.values()):
        return None
    path = [s]
    on_path = {s}
    nodes = 0

    def feasible(cur: Cell) -> bool:
        # every cell off the path needs two usable neighbors, and the
        # remainder must stay connected to both path ends
        for c in poly.free:
            if c in on_path:
                continue
            free_deg = sum(1 for m in adj[c] if m not in on_path or m == cur or m == s)
            if free_deg < 2:
                return False
        rest = [c for c in poly.free if c not in on_path]
        if not rest:
            return True
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            x = stack.pop()
            for m in adj[x]:
                if m not in on_path and m not in seen:
                    seen.add(m)
                    stack.append(m)
        if len(seen) != len(rest):
            return False
        return any(m in seen for m in adj[cur]) and any(m in seen for m in adj[s])

    def extend(cur: Cell) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExceeded
        if len(path) == n:
            return s in adj[cur]
        # fewest onward options first
        options = [m for m in adj[cur] if m not in on_path]
        options.sort(key=lambda m: sum(1 for x in adj[m] if x not in on_path))
        for m in options:
            path.append(m)
            on_path.add(m)
            if (len(path) == n or feasible(m)) and extend(m):
                return True
            path.pop()
            on_path.discard(m)
        return False

    try:
        found = extend(s)
    except _BudgetExceeded:
        return None
    return path + [s] if found else None


class _BudgetExceeded(Exception):
    pass


def brute_force_tour_length(poly: GridPolygon, s: Cell | None = None) -> int:
    """Minimum covering closed walk by iterative deepening over raw walks.

    Deliberately shares nothing with Held-Karp; only usable for tiny inputs.
    """
    s = min(poly.free) if s is None else tuple(s)
    cells = sorted(poly.free)
    index = {c: i for i, c in enumerate(cells)}
    adj = [[index[m] for m in poly.neighbors(c)] for c in cells]
    home = index[s]
    n = len(cells)
    full = (1 << n) - 1
    to_home = bfs_distances(poly.free, s, poly.kind)
    back = [to_home[c] for c in cells]

    for limit in range(n - 1 if n > 1 else 0, 2 * n - 1):
        failed: dict[tuple[int, int], int] = {}

        def search(pos: int, seen: int, left: int) -> bool:
            if seen == full and pos == home:
                return True
            missing = n - bin(seen).count("1")
            need = max(back[pos], missing + 1 if missing else 0)
            if need > left:
                return False
            if failed.get((pos, seen), -1) >= left:
                return False
            for m in adj[pos]:
                if search(m, seen | (1 << m), left - 1):
                    return True
            failed[(pos, seen)] = left
            return False

        if search(home, 1 << home, limit):
            return limit
    raise AssertionError("no covering walk within 2C - 2 steps")


def competitive_ratio(trace: ExplorationTrace, tour: TourSolution) -> Fraction:
    """Exact ratio of the online tour length to the optimum."""
    if set(trace.walk) != set(tour.walk) or trace.start != tour.start:
        raise ValueError("trace and tour belong to different polygons or starts")
    if tour.length == 0:
        return Fraction(1)
    return Fraction(trace.steps, tour.length)
