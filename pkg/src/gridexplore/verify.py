"""Verification suites: run the explorers and oracles over polygon pools and
check every bound row by row.

Rows carry raw numbers only. Whether a row passes is decided by the check
registry each time it is asked, so a serialized report can never disagree
with its own numbers.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable, Iterator

from .explore import explore_dfs, explore_smartdfs
from .generators import (
    comp_hex,
    comp_tri,
    corridor,
    enumerate_simple,
    honeycomb,
    random_polygon,
    random_simple,
    random_thick,
)
from .grid import HEX, TRI, GridKind
from .oracle import DEFAULT_CEILING, TourTooLarge, brute_force_tour_length, optimal_tour
from .polygon import GridPolygon, perimeter
from .textio import serialize_polygon

SCHEMA_VERSION = 1
SUITES = ("bounds", "offsets", "shortest-paths", "competitive", "tightness")


def smart_bound(kind: GridKind, C: int, E: int) -> Fraction:
    """Upper bound on SmartDFS steps for a simple polygon."""
    if kind is HEX:
        return C + Fraction(E, 4) - Fraction(5, 2)
    return Fraction(C + E - 4)


def no_narrow_step_bound(kind: GridKind, C: int, E: int) -> Fraction:
    if kind is HEX:
        return C + Fraction(E, 4) - Fraction(9, 2)
    return Fraction(C + E - 6)


def no_narrow_perimeter_bound(kind: GridKind, C: int) -> Fraction:
    if kind is HEX:
        return Fraction(4 * C + 26, 3)
    return Fraction(C + 14, 3)


def diameter_bound(kind: GridKind, E: int) -> Fraction:
    if kind is HEX:
        return Fraction(E, 4) - Fraction(3, 2)
    return Fraction(E - 3)


def offset_loss(kind: GridKind) -> int:
    return 12 if kind is HEX else 6


@dataclass(frozen=True)
class Check:
    description: str
    predicate: Callable[["Row"], bool]
    informational: bool = False


def _ratio_ok(r: "Row") -> bool:
    return r.ratio is not None and r.ratio <= Fraction(4, 3)


CHECKS: dict[str, Check] = {
    "dfs-steps": Check("DFS takes exactly 2C-2 steps", lambda r: r.S_dfs == 2 * r.C - 2),
    "smart-bound": Check("SmartDFS within its upper bound", lambda r: r.slack >= 0),
    "smart-tight": Check("SmartDFS meets its upper bound exactly", lambda r: r.slack == 0),
    "no-narrow-perimeter": Check(
        "perimeter bound without narrow passages",
        lambda r: r.E <= no_narrow_perimeter_bound(r.kind, r.C),
    ),
    "no-narrow-steps": Check(
        "step bound without narrow passages",
        lambda r: r.S_smart <= no_narrow_step_bound(r.kind, r.C, r.E),
    ),
    "honeycomb-equality": Check(
        "honeycomb attains the perimeter bound",
        lambda r: r.E == no_narrow_perimeter_bound(r.kind, r.C),
    ),
    "offset": Check(
        "offset loses at least 12 (hex) or 6 (tri) edges per layer",
        lambda r: r.extra["E_offset"] <= r.E - offset_loss(r.kind) * r.extra["depth"],
    ),
    "diameter": Check(
        "shortest paths within the perimeter bound",
        lambda r: r.extra["diameter"] <= diameter_bound(r.kind, r.E),
    ),
    "ratio": Check("SmartDFS within 4/3 of the optimum", _ratio_ok),
    "oracle-agree": Check(
        "Held-Karp agrees with brute force", lambda r: r.S_opt == r.extra["S_brute"]
    ),
    "narrow-optimal": Check("narrow corridors explored optimally", lambda r: r.S_smart == r.S_opt),
    "hex-comp-identity": Check(
        "3 S_smart = 4 S_opt - 7 on the hex family", lambda r: 3 * r.S_smart == 4 * r.S_opt - 7
    ),
    "hex-comp-ratio": Check(
        "ratio above 1.30 on the longest hex family member",
        lambda r: r.ratio is not None and r.ratio > Fraction(13, 10),
    ),
    "tri-comp": Check("ratio on the tri family", lambda r: True, informational=True),
}


@dataclass(frozen=True)
class Row:
    suite: str
    check: str
    kind: GridKind
    label: str
    polygon: GridPolygon = field(repr=False, compare=False)
    C: int
    E: int
    S_dfs: int | None = None
    S_smart: int | None = None
    S_opt: int | None = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def slack(self) -> Fraction | None:
        if self.S_smart is None:
            return None
        return smart_bound(self.kind, self.C, self.E) - self.S_smart

    @property
    def ratio(self) -> Fraction | None:
        if self.S_smart is None or self.S_opt is None:
            return None
        if self.S_opt == 0:
            return Fraction(1)
        return Fraction(self.S_smart, self.S_opt)

    @property
    def passed(self) -> bool:
        return CHECKS[self.check].predicate(self)

    @property
    def informational(self) -> bool:
        return CHECKS[self.check].informational

    def sort_key(self) -> tuple:
        return (self.suite, self.check, self.kind.value, self.label)


@dataclass
class VerificationReport:
    rows: list[Row] = field(default_factory=list)

    def extend(self, rows) -> None:
        self.rows.extend(rows)

    def sorted_rows(self) -> list[Row]:
        return sorted(self.rows, key=Row.sort_key)

    def failures(self) -> list[Row]:
        return [r for r in self.sorted_rows() if not r.informational and not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures()

    def summary(self) -> list[dict]:
        groups: dict[tuple[str, str, str], list[Row]] = {}
        for r in self.sorted_rows():
            groups.setdefault((r.suite, r.check, r.kind.value), []).append(r)
        out = []
        for (suite, check, kind), rows in groups.items():
            slacks = [r.slack for r in rows if r.slack is not None]
            ratios = [r.ratio for r in rows if r.ratio is not None]
            out.append({
                "suite": suite,
                "check": check,
                "grid": kind,
                "rows": len(rows),
                "failed": sum(not r.passed for r in rows),
                "informational": CHECKS[check].informational,
                "min_slack": min(slacks) if slacks else None,
                "max_ratio": max(ratios) if ratios else None,
            })
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# gridexplore verification report, schema v{SCHEMA_VERSION}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "check", "grid", "label", "C", "E", "S_dfs", "S_smart", "S_opt",
                    "slack", "ratio", "extra", "passed"])
        for r in self.sorted_rows():
            extra = ";".join(f"{k}={v}" for k, v in sorted(r.extra.items()))
            w.writerow([
                r.suite, r.check, r.kind.value, r.label, r.C, r.E,
                _blank(r.S_dfs), _blank(r.S_smart), _blank(r.S_opt),
                _blank(r.slack), _blank(r.ratio), extra,
                "info" if r.informational else ("pass" if r.passed else "FAIL"),
            ])
        return buf.getvalue()

    def to_markdown(self) -> str:
        lines = ["# Verification report", ""]
        lines.append("| suite | check | grid | rows | failed | min slack | max ratio |")
        lines.append("|---|---|---|---:|---:|---:|---:|")
        for g in self.summary():
            failed = "info" if g["informational"] else str(g["failed"])
            lines.append(
                f"| {g['suite']} | {g['check']} | {g['grid']} | {g['rows']} | {failed} "
                f"| {_blank(g['min_slack'])} | {_fmt_ratio(g['max_ratio'])} |"
            )
        lines.append("")
        bad = self.failures()
        lines.append(f"**{'PASS' if not bad else 'FAIL'}**: {len(self.rows)} rows, {len(bad)} failed.")
        for r in bad:
            lines += [
                "",
                f"## {r.check} failed on {r.label}",
                "",
                f"C={r.C} E={r.E} S_dfs={_blank(r.S_dfs)} S_smart={_blank(r.S_smart)} "
                f"S_opt={_blank(r.S_opt)} slack={_blank(r.slack)} {r.extra}",
                "",
                "```",
                serialize_polygon(r.polygon).rstrip(),
                "```",
            ]
        return "\n".join(lines) + "\n"


def _blank(v) -> str:
    return "" if v is None else str(v)


def _fmt_ratio(v: Fraction | None) -> str:
    return "" if v is None else f"{v} ({float(v):.4f})"


# --- seed manifest ----------------------------------------------------------

def load_manifest() -> dict:
    text = resources.files("gridexplore").joinpath("data/seeds.json").read_text()
    return json.loads(text)


def _pool(entry: dict, widen: int) -> Iterator[tuple[int, int]]:
    """(seed, cell count) pairs; ``widen`` multiplies the pool size."""
    lo, hi = entry["min_cells"], entry["max_cells"]
    for k in range(entry["count"] * widen):
        seed = entry["first_seed"] + k
        yield seed, lo + seed % (hi - lo + 1)


def _row(suite, check, poly, label, **kw) -> Row:
    return Row(suite, check, poly.kind, label, poly, poly.C, poly.E, **kw)


# --- suites -----------------------------------------------------------------

def suite_bounds(manifest: dict, widen: int = 1) -> list[Row]:
    rows = []
    for kind in (HEX, TRI):
        for seed, n in _pool(manifest["dfs"], widen):
            p = random_polygon(kind, n, seed)
            rows.append(_row("bounds", "dfs-steps", p, f"random-holes n={n} seed={seed}",
                             S_dfs=explore_dfs(p).steps))
        for seed, n in _pool(manifest["smart_bounds"], widen):
            p = random_simple(kind, n, seed)
            rows.append(_row("bounds", "smart-bound", p, f"random n={n} seed={seed}",
                             S_smart=explore_smartdfs(p).steps))
        for seed, n in _pool(manifest["no_narrow"], widen):
            p = random_thick(kind, n, seed)
            rows += _no_narrow_rows(p, f"thick n={n} seed={seed}")
    for radius in range(2, 5):
        rows += _no_narrow_rows(honeycomb(radius), f"honeycomb r={radius}")
    h = honeycomb(1)
    rows.append(_row("bounds", "honeycomb-equality", h, "honeycomb r=1"))
    return rows


def qualifies_no_narrow(p: GridPolygon, trace=None) -> bool:
    """No narrow-passage cells and no split event in the first layer."""
    trace = trace or explore_smartdfs(p)
    if any(ev.layer == 1 for ev in trace.events):
        return False
    return not p.narrow_passage_cells()


def _no_narrow_rows(p: GridPolygon, label: str) -> list[Row]:
    t = explore_smartdfs(p)
    if not qualifies_no_narrow(p, t):
        return []
    return [
        _row("bounds", "no-narrow-perimeter", p, label, S_smart=t.steps),
        _row("bounds", "no-narrow-steps", p, label, S_smart=t.steps),
    ]


def suite_offsets(manifest: dict, widen: int = 1) -> list[Row]:
    rows = []
    for kind in (HEX, TRI):
        pools = [
            ("random", random_simple, manifest["offsets"]),
            ("thick", random_thick, manifest["thick_offsets"]),
        ]
        for name, make, entry in pools:
            for seed, n in _pool(entry, widen):
                p = make(kind, n, seed)
                depth = 1
                while True:
                    off = p.offset(depth)
                    if not off:
                        break
                    rows.append(_row(
                        "offsets", "offset", p, f"{name} n={n} seed={seed} depth={depth}",
                        extra={"depth": depth, "E_offset": perimeter(off, kind)},
                    ))
                    depth += 1
    return rows


def suite_shortest_paths(manifest: dict, widen: int = 1) -> list[Row]:
    rows = []
    for kind in (HEX, TRI):
        for seed, n in _pool(manifest["shortest_paths"], widen):
            p = random_simple(kind, n, seed)
            rows.append(_row("shortest-paths", "diameter", p, f"random n={n} seed={seed}",
                             extra={"diameter": p.diameter()}))
    return rows


def suite_competitive(manifest: dict, widen: int = 1, ceiling: int = DEFAULT_CEILING) -> list[Row]:
    rows = []
    exhaustive = enumerate_simple(HEX, manifest["exhaustive_hex_max_cells"])
    for i, p in enumerate(exhaustive):
        rows.append(_ratio_row(p, f"exhaustive #{i:05d} n={p.C}", ceiling))
    for kind in (HEX, TRI):
        for seed, n in _pool(manifest["competitive"], widen):
            p = random_simple(kind, n, seed)
            rows.append(_ratio_row(p, f"random n={n} seed={seed}", ceiling))
    small = manifest["oracle_check_max_cells"]
    for kind in (HEX, TRI):
        for i, p in enumerate(enumerate_simple(kind, small)):
            s = min(p.free)
            rows.append(_row(
                "competitive", "oracle-agree", p, f"exhaustive #{i:05d} n={p.C}",
                S_opt=optimal_tour(p, s, ceiling=max(ceiling, small), reduce=False).length,
                extra={"S_brute": brute_force_tour_length(p, s)},
            ))
    return rows


def _ratio_row(p: GridPolygon, label: str, ceiling: int) -> Row:
    t = explore_smartdfs(p)
    opt = optimal_tour(p, t.start, ceiling=ceiling)
    return _row("competitive", "ratio", p, label, S_smart=t.steps, S_opt=opt.length)


def suite_tightness(manifest: dict, widen: int = 1, ceiling: int = DEFAULT_CEILING) -> list[Row]:
    rows = []
    lo, hi = manifest["corridor_tight_lengths"]
    for kind in (HEX, TRI):
        for L in range(lo, hi + 1):
            p = corridor(kind, 1, L)
            rows.append(_row("tightness", "smart-tight", p, f"corridor w=1 len={L:02d}",
                             S_smart=explore_smartdfs(p).steps))
    lo, hi = manifest["narrow_lengths"]
    for kind in (HEX, TRI):
        for width in (1, 2):
            for L in range(lo, hi + 1):
                p = corridor(kind, width, L)
                t = explore_smartdfs(p)
                opt = optimal_tour(p, t.start, ceiling=ceiling)
                rows.append(_row("tightness", "narrow-optimal", p, f"corridor w={width} len={L:02d}",
                                 S_smart=t.steps, S_opt=opt.length))

    lo, hi = manifest["comp_hex_lengths"]
    solved = []
    for m in range(lo, hi + 1):
        p = comp_hex(m)
        t = explore_smartdfs(p)
        try:
            opt = optimal_tour(p, t.start, ceiling=ceiling)
        except TourTooLarge:
            continue
        row = _row("tightness", "hex-comp-identity", p, f"comp-hex len={m:02d}",
                   S_smart=t.steps, S_opt=opt.length, extra={"method": opt.method})
        rows.append(row)
        solved.append(row)
    if solved:
        last = solved[-1]
        rows.append(Row("tightness", "hex-comp-ratio", HEX, last.label, last.polygon, last.C,
                        last.E, S_smart=last.S_smart, S_opt=last.S_opt, extra=dict(last.extra)))

    lo, hi = manifest["comp_tri_rows"]
    for n in range(lo, hi + 1):
        p = comp_tri(n)
        t = explore_smartdfs(p)
        try:
            opt = optimal_tour(p, t.start, ceiling=ceiling)
        except TourTooLarge:
            continue
        rows.append(_row("tightness", "tri-comp", p, f"comp-tri rows={n}",
                         S_smart=t.steps, S_opt=opt.length, extra={"method": opt.method}))
    return rows


def run_suite(
    name: str, widen: int = 1, ceiling: int = DEFAULT_CEILING, manifest: dict | None = None
) -> VerificationReport:
    if name != "all" and name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    manifest = manifest or load_manifest()
    names = SUITES if name == "all" else (name,)
    report = VerificationReport()
    for n in names:
        if n == "bounds":
            report.extend(suite_bounds(manifest, widen))
        elif n == "offsets":
            report.extend(suite_offsets(manifest, widen))
        elif n == "shortest-paths":
            report.extend(suite_shortest_paths(manifest, widen))
        elif n == "competitive":
            report.extend(suite_competitive(manifest, widen, ceiling))
        else:
            report.extend(suite_tightness(manifest, widen, ceiling))
    return report
