"""Acceptance criteria, each checked at its stated tolerance and time budget.

Every test records one PASS/FAIL line, printed together at the end of the
pytest run.
"""

from __future__ import annotations

import time
from fractions import Fraction

from gridexplore.explore import explore_dfs, explore_smartdfs
from gridexplore.generators import (
    comp_hex,
    corridor,
    enumerate_simple,
    honeycomb,
    random_polygon,
    random_simple,
    random_thick,
)
from gridexplore.grid import HEX, TRI
from gridexplore.oracle import brute_force_tour_length, optimal_tour
from gridexplore.polygon import perimeter
from gridexplore.verify import load_manifest, qualifies_no_narrow

MANIFEST = load_manifest()


def pool(name):
    entry = MANIFEST[name]
    lo, hi = entry["min_cells"], entry["max_cells"]
    for k in range(entry["count"]):
        seed = entry["first_seed"] + k
        yield seed, lo + seed % (hi - lo + 1)


def finish(record, number, title, failures, checked, started, budget, extra=""):
    elapsed = time.perf_counter() - started
    ok = not failures and elapsed < budget
    detail = f"{checked} checks, {len(failures)} violations, {elapsed:.1f} s of {budget:.0f} s"
    if extra:
        detail += f", {extra}"
    record(number, title, ok, detail)
    assert not failures, failures[:5]
    assert elapsed < budget


def test_criterion_01_dfs_exact(record_criterion):
    t0 = time.perf_counter()
    failures, checked, holed = [], 0, 0
    for kind in (HEX, TRI):
        for seed, n in pool("dfs"):
            p = random_polygon(kind, n, seed)
            assert p.C <= 40
            holed += not p.simple
            checked += 1
            if explore_dfs(p).steps != 2 * p.C - 2:
                failures.append((kind, n, seed))
    assert holed > 0
    finish(record_criterion, 1, "DFS takes exactly 2C-2 steps", failures, checked, t0, 5,
           f"{holed} with holes")


def _bound_criterion(record, number, kind, bound, title):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for seed, n in pool("smart_bounds"):
        p = random_simple(kind, n, seed)
        assert p.C <= 60 and p.simple
        checked += 1
        if explore_smartdfs(p).steps > bound(p.C, p.E):
            failures.append((n, seed))
    for length in range(2, 21):
        p = corridor(kind, 1, length)
        checked += 1
        if explore_smartdfs(p).steps != bound(p.C, p.E):
            failures.append(("corridor", length))
    finish(record, number, title, failures, checked, t0, 30)


def test_criterion_02_hex_upper_bound(record_criterion):
    _bound_criterion(record_criterion, 2, HEX, lambda C, E: C + Fraction(E, 4) - Fraction(5, 2),
                     "hex SmartDFS bound, tight on width-1 corridors")


def test_criterion_03_tri_upper_bound(record_criterion):
    _bound_criterion(record_criterion, 3, TRI, lambda C, E: Fraction(C + E - 4),
                     "tri SmartDFS bound, tight on width-1 corridors")


def test_criterion_04_competitive_ratio(record_criterion):
    t0 = time.perf_counter()
    failures, checked, worst = [], 0, Fraction(0)
    instances = list(enumerate_simple(HEX, 10))
    for kind in (HEX, TRI):
        for seed, n in pool("competitive"):
            p = random_simple(kind, n, seed)
            assert p.C <= 14
            instances.append(p)
    for p in instances:
        t = explore_smartdfs(p)
        opt = optimal_tour(p, t.start, reduce=False).length
        ratio = Fraction(t.steps, opt) if opt else Fraction(1)
        worst = max(worst, ratio)
        checked += 1
        if ratio > Fraction(4, 3):
            failures.append(sorted(p.free))
    finish(record_criterion, 4, "SmartDFS within 4/3 of the optimum", failures, checked, t0, 600,
           f"worst ratio {worst}")


def test_criterion_05_hex_tight_family(record_criterion):
    t0 = time.perf_counter()
    failures, checked, last = [], 0, None
    for m in range(1, 25):
        p = comp_hex(m)
        t = explore_smartdfs(p)
        opt = optimal_tour(p, t.start).length
        checked += 1
        if Fraction(t.steps) != Fraction(4, 3) * opt - Fraction(7, 3):
            failures.append((m, t.steps, opt))
        last = Fraction(t.steps, opt)
    if not last > Fraction(13, 10):
        failures.append(("ratio", last))
    finish(record_criterion, 5, "width-3 hex family: S = 4/3 S_opt - 7/3", failures, checked, t0, 120,
           f"longest ratio {last} = {float(last):.4f}")


def test_criterion_06_offsets(record_criterion):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for kind, loss in ((HEX, 12), (TRI, 6)):
        for seed, n in pool("offsets"):
            p = random_simple(kind, n, seed)
            depth = 1
            while p.offset(depth):
                checked += 1
                if perimeter(p.offset(depth), kind) > p.E - loss * depth:
                    failures.append((kind, n, seed, depth))
                depth += 1
    finish(record_criterion, 6, "offsets lose 12 (hex) / 6 (tri) edges per layer", failures, checked,
           t0, 30)


def test_criterion_07_shortest_paths(record_criterion):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for kind in (HEX, TRI):
        for seed, n in pool("shortest_paths"):
            p = random_simple(kind, n, seed)
            assert p.C <= 50
            bound = Fraction(p.E, 4) - Fraction(3, 2) if kind is HEX else Fraction(p.E - 3)
            checked += 1
            if p.diameter() > bound:
                failures.append((kind, n, seed))
    finish(record_criterion, 7, "diameter within the perimeter bound", failures, checked, t0, 60)


def test_criterion_08_no_narrow_bounds(record_criterion):
    t0 = time.perf_counter()
    failures, checked = [], 0
    qualifying = {HEX: 0, TRI: 0}
    candidates = [(k, random_thick(k, n, seed)) for k in (HEX, TRI) for seed, n in pool("no_narrow")]
    candidates += [(HEX, honeycomb(r)) for r in range(2, 5)]
    for kind, p in candidates:
        t = explore_smartdfs(p)
        if not qualifies_no_narrow(p, t):
            continue
        qualifying[kind] += 1
        checked += 1
        if kind is HEX:
            ok = 3 * p.E <= 4 * p.C + 26 and 4 * t.steps <= 4 * p.C + p.E - 18
        else:
            ok = 3 * p.E <= p.C + 14 and t.steps <= p.C + p.E - 6
        if not ok:
            failures.append((kind, sorted(p.free)))
    h = honeycomb(1)
    checked += 1
    if not ((h.C, h.E) == (7, 18) and 3 * h.E == 4 * h.C + 26):
        failures.append("honeycomb equality")
    assert qualifying[HEX] and qualifying[TRI]
    finish(record_criterion, 8, "perimeter and step bounds without narrow passages", failures, checked,
           t0, 120, f"{qualifying[HEX]} hex and {qualifying[TRI]} tri qualifying polygons")


def test_criterion_09_oracle_agreement(record_criterion):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for kind in (HEX, TRI):
        for p in enumerate_simple(kind, 8):
            s = min(p.free)
            checked += 1
            if optimal_tour(p, s, reduce=False).length != brute_force_tour_length(p, s):
                failures.append(sorted(p.free))
    finish(record_criterion, 9, "Held-Karp equals brute force for C <= 8", failures, checked, t0, 300)


def test_criterion_10_narrow_passages_optimal(record_criterion):
    t0 = time.perf_counter()
    failures, checked = [], 0
    for kind in (HEX, TRI):
        for width in (1, 2):
            for length in range(2, 16):
                p = corridor(kind, width, length)
                t = explore_smartdfs(p)
                checked += 1
                if t.steps != optimal_tour(p, t.start).length:
                    failures.append((kind, width, length))
    finish(record_criterion, 10, "narrow corridors explored optimally", failures, checked, t0, 60)
