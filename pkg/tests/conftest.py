from __future__ import annotations

import pytest

from zonodt.corpus import graph_corpus, quiver_corpus


@pytest.fixture(scope="session")
def corpus():
    return graph_corpus()


@pytest.fixture(scope="session")
def quivers():
    return quiver_corpus()


_CRITERIA: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1]
    if "test_acceptance.py" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    number = name.split("_")[2]
    if report.when == "call" or report.outcome != "passed":
        _CRITERIA.setdefault(number, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA, key=int):
        outcomes = _CRITERIA[number]
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict} ({len(outcomes)} test(s))")
