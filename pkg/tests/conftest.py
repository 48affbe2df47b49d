from __future__ import annotations

_criteria: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion[" not in report.nodeid:
        return
    number = int(report.nodeid.rsplit("criterion-", 1)[1].rstrip("]"))
    if report.when == "call" or report.failed:
        _criteria[number] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        terminalreporter.write_line(f"criterion {number:2d}: {_criteria[number]}  {CRITERIA[number][0]}")
