from __future__ import annotations

import csv
import io
from fractions import Fraction

import pytest

from gridexplore.explore import explore_smartdfs
from gridexplore.generators import corridor, honeycomb
from gridexplore.grid import HEX, TRI
from gridexplore.textio import parse_polygon
from gridexplore.verify import (
    CHECKS,
    SCHEMA_VERSION,
    Row,
    VerificationReport,
    load_manifest,
    run_suite,
)


def tiny_manifest():
    m = load_manifest()
    for key in ("dfs", "smart_bounds", "no_narrow", "offsets", "thick_offsets",
                "shortest_paths", "competitive"):
        m[key] = dict(m[key], count=6)
    m["exhaustive_hex_max_cells"] = 5
    m["oracle_check_max_cells"] = 5
    m["corridor_tight_lengths"] = [2, 5]
    m["narrow_lengths"] = [2, 5]
    m["comp_hex_lengths"] = [20, 22]
    m["comp_tri_rows"] = [1, 2]
    return m


def fake_row(S_smart, check="smart-bound", label="x"):
    p = corridor(HEX, 1, 5)
    return Row("bounds", check, HEX, label, p, p.C, p.E, S_smart=S_smart)


def test_flags_follow_raw_values():
    ok, bad = fake_row(8), fake_row(9)
    assert ok.slack == 0 and ok.passed
    assert bad.slack == -1 and not bad.passed
    report = VerificationReport([ok, bad])
    assert not report.ok
    assert report.failures() == [bad]


def test_markdown_lists_offending_polygon():
    md = VerificationReport([fake_row(9)]).to_markdown()
    assert "**FAIL**" in md
    block = md.split("```")[1]
    assert parse_polygon(block.strip() + "\n") == corridor(HEX, 1, 5)


def test_csv_schema_and_order():
    rows = [fake_row(8, label="b"), fake_row(8, label="a"), fake_row(9, label="c")]
    text = VerificationReport(rows).to_csv()
    first, rest = text.split("\n", 1)
    assert first == f"# gridexplore verification report, schema v{SCHEMA_VERSION}"
    table = list(csv.DictReader(io.StringIO(rest)))
    assert [r["label"] for r in table] == ["a", "b", "c"]
    assert [r["passed"] for r in table] == ["pass", "pass", "FAIL"]
    assert table[0]["slack"] == "0"


def test_report_order_independent():
    rows = [fake_row(8, label=str(i)) for i in range(5)]
    a = VerificationReport(rows).to_csv()
    b = VerificationReport(rows[::-1]).to_csv()
    assert a == b


def test_informational_rows_never_fail():
    p = corridor(TRI, 1, 3)
    r = Row("tightness", "tri-comp", TRI, "t", p, p.C, p.E, S_smart=100, S_opt=1)
    assert r.informational
    assert VerificationReport([r]).ok


def test_every_check_has_a_description():
    assert all(c.description for c in CHECKS.values())


def test_honeycomb_equality_row():
    h = honeycomb(1)
    r = Row("bounds", "honeycomb-equality", HEX, "h", h, h.C, h.E)
    assert r.passed
    assert 3 * h.E == 4 * h.C + 26


@pytest.mark.parametrize("suite", ["bounds", "offsets", "shortest-paths", "competitive", "tightness"])
def test_suites_pass_on_small_pools(suite):
    report = run_suite(suite, manifest=tiny_manifest())
    assert report.rows
    assert report.ok, report.to_markdown()


def test_tightness_slack_zero_on_width_one():
    report = run_suite("tightness", manifest=tiny_manifest())
    rows = [r for r in report.rows if r.check == "smart-tight"]
    assert rows and all(r.slack == 0 for r in rows)


def test_rows_reproduce():
    report = run_suite("bounds", manifest=tiny_manifest())
    for r in report.rows:
        if r.check == "smart-bound":
            assert explore_smartdfs(r.polygon).steps == r.S_smart
            assert (r.polygon.C, r.polygon.E) == (r.C, r.E)


def test_run_is_deterministic():
    m = tiny_manifest()
    assert run_suite("all", manifest=m).to_csv() == run_suite("all", manifest=m).to_csv()


def test_widen_grows_pools():
    m = tiny_manifest()
    one = run_suite("shortest-paths", manifest=m)
    two = run_suite("shortest-paths", manifest=m, widen=2)
    assert len(two.rows) == 2 * len(one.rows)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("everything")


def test_ratio_exact():
    p = corridor(HEX, 1, 2)
    r = Row("competitive", "ratio", HEX, "r", p, p.C, p.E, S_smart=4, S_opt=3)
    assert r.ratio == Fraction(4, 3) and r.passed
    r = Row("competitive", "ratio", HEX, "r", p, p.C, p.E, S_smart=41, S_opt=30)
    assert not r.passed
