import csv
import io
import json
from fractions import Fraction

import pytest

from ramm import PolicyId, compute_metrics, improved_max_min, min_min, ramm
from ramm.gantt import render_gantt
from ramm.model import Schedule
from ramm.report import CSV_COLUMNS, compare, emit_report, format_number


def table_row(text, name):
    for line in text.splitlines():
        if line.split() and line.split()[0] == name:
            return line.split()[1:]
    raise AssertionError(f"no row {name}")


@pytest.mark.parametrize("name,expected", [
    ("p1", ["9", "9", "8", "7"]), ("p2", ["11", "11", "13", "10"]), ("p3", ["4", "4", "14", "4"]),
])
def test_text_table_rows(request, name, expected):
    r = compare(name.upper(), request.getfixturevalue(name))
    assert table_row(emit_report(r), name.upper()) == expected


def test_text_header_order(p1):
    text = emit_report(compare("P1", p1, with_oracle=True))
    assert text.splitlines()[1].split() == ["Problem", "Min-Min", "Max-Min", "Imp", "Max-Min",
                                            "RAMM", "Optimal"]
    assert table_row(text, "P1") == ["9", "9", "8", "7", "7"]


def test_empty_policy_set_is_header_only(p1):
    assert emit_report(compare("P1", p1, policies=[])).splitlines() == ["Makespan", "Problem"]


def test_csv(p1):
    rows = list(csv.reader(io.StringIO(emit_report(compare("P1", p1), "csv"))))
    assert tuple(rows[0]) == CSV_COLUMNS
    ramm_row = dict(zip(CSV_COLUMNS, rows[4]))
    assert ramm_row == {
        "scenario": "P1", "policy": "ramm", "variant": "paper_consistent", "makespan": "7",
        "imbalance": "0.142857", "loads": "7;6",
        "assignments": "T2:R1:0:1;T1:R2:0:6;T3:R1:1:4;T4:R1:4:7"}
    assert rows[1][2] == "-"


def test_csv_oracle_row(p1):
    rows = list(csv.reader(io.StringIO(emit_report(compare("P1", p1, with_oracle=True), "csv"))))
    assert rows[-1][:4] == ["P1", "optimal", "-", "7"]


def test_json_values_match_recomputed_metrics(p2):
    doc = json.loads(emit_report(compare("P2", p2), "json"))
    for entry in doc["reports"][0]["policies"]:
        loads = {}
        for a in entry["assignments"]:
            loads[a["resource"]] = loads.get(a["resource"], 0) + a["finish"] - a["start"]
        for res, load in entry["loads"].items():
            assert loads.get(res, 0) == load
        assert entry["makespan"] == max(entry["loads"].values())
    assert [e["makespan"] for e in doc["reports"][0]["policies"]] == [11, 11, 13, 10]


def test_report_matches_metrics(p3):
    r = compare("P3", p3)
    for o in r.outcomes:
        assert o.metrics == compute_metrics(o.schedule)


@pytest.mark.parametrize("q,text", [
    (Fraction(7), "7"), (Fraction(1, 7), "0.142857"), (Fraction(1, 4), "0.25"),
    (Fraction(2, 3), "0.666667"), (Fraction(1, 10**8), "0"), (Fraction(-3, 2), "-1.5"),
])
def test_format_number(q, text):
    assert format_number(q) == text


def test_unknown_format(p1):
    with pytest.raises(ValueError):
        emit_report(compare("P1", p1), "xml")


# -- gantt -----------------------------------------------------------------

def segments(text, resource):
    for line in text.splitlines():
        if line.startswith(resource + " "):
            return line.rsplit("|", 1)[1].split()
    raise AssertionError(resource)


def test_gantt_ascii_ramm_p1(p1):
    text = render_gantt(ramm(p1), "ascii")
    assert segments(text, "R1") == ["T2[0-1]", "T3[1-4]", "T4[4-7]"]
    assert segments(text, "R2") == ["T1[0-6]"]
    assert "makespan 7" in text


def test_gantt_ascii_idle_resource(p1):
    text = render_gantt(min_min(p1), "ascii")
    assert segments(text, "R2") == []
    assert len(segments(text, "R1")) == 4


def test_gantt_bar_proportional(p1):
    line = render_gantt(ramm(p1), "ascii", width=70).splitlines()[0]
    bar = line.split("|")[1]
    assert len(bar) == 70
    assert bar.startswith("[T2======][T3")


def test_gantt_empty_schedule(p1):
    text = render_gantt(Schedule((), Fraction(0), p1), "ascii")
    assert segments(text, "R1") == [] and segments(text, "R2") == []


def test_gantt_svg(p1):
    svg = render_gantt(improved_max_min(p1), "svg")
    assert svg.startswith("<svg") and svg.count("<rect") == 4
    assert "<title>T3 [0, 8)</title>" in svg


def test_gantt_unknown_style(p1):
    with pytest.raises(ValueError):
        render_gantt(ramm(p1), "png")
