"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""

import pytest

_outcomes = {}    # number -> [title, passed, total]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        number, title = mark.args
        entry = _outcomes.setdefault(number, [title, 0, 0])
        entry[1] += report.passed
        entry[2] += 1


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        title, passed, total = _outcomes[number]
        verdict = "PASS" if passed == total else "FAIL"
        terminalreporter.write_line(f"criterion {number} [PRIMARY] {title}: {verdict} ({passed}/{total})")
