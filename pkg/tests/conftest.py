"""Per-criterion pass/fail summary for the acceptance tests.

Tests marked ``@pytest.mark.criterion(number, title)`` feed one line per
criterion into the terminal summary; a criterion passes only when every test
carrying its number passed.
"""
from collections import defaultdict

import pytest

_results: dict[int, dict] = defaultdict(lambda: {"title": "", "passed": [], "failed": []})


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.skipped:
        return
    # setup errors (e.g. a failing session run) count against the criterion too
    if report.when != "call" and not report.failed:
        return
    number, title = marker.args
    entry = _results[number]
    entry["title"] = title
    part = item.name.removeprefix("test_")
    entry["passed" if report.passed else "failed"].append(part)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"criterion {number}: {status}  {entry['title']}"
        if entry["failed"]:
            line += f"  (failing parts: {', '.join(entry['failed'])})"
        terminalreporter.write_line(line)
