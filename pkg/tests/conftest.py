from __future__ import annotations

import pytest

from ramm import EtcMatrix

BENCH_ROWS = {
    "P1": [[2, 6], [1, 2], [3, 8], [3, 40]],
    "P2": [[3, 10], [2, 13], [5, 21], [1, 12]],
    "P3": [[1, 7], [1, 14], [1, 14], [1, 4]],
}
P1_ALT_ROWS = [[2, 6], [1, 3], [3, 8], [3, 40]]


@pytest.fixture
def p1():
    return EtcMatrix.from_rows(BENCH_ROWS["P1"])


@pytest.fixture
def p1_alt():
    return EtcMatrix.from_rows(P1_ALT_ROWS)


@pytest.fixture
def p2():
    return EtcMatrix.from_rows(BENCH_ROWS["P2"])


@pytest.fixture
def p3():
    return EtcMatrix.from_rows(BENCH_ROWS["P3"])


_acceptance: dict[int, tuple[str, list[str]]] = {}


def pytest_runtest_logreport(report):
    marker = _MARKERS.get(report.nodeid)
    if marker is None:
        return
    number, title = marker
    if report.when == "call" or report.outcome != "passed":
        _acceptance.setdefault(number, (title, []))[1].append(report.outcome)


_MARKERS: dict[str, tuple[int, str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            _MARKERS[item.nodeid] = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, outcomes = _acceptance[number]
        ok = outcomes and all(o == "passed" for o in outcomes)
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}")
