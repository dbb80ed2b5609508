import pytest

from subperiod.game import outcome_sequence

# Warm the JIT cache once so timing tests measure computation, not compilation.
outcome_sequence((1, 3), 10)
outcome_sequence((9, 10), 10)

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test belongs to")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = getattr(report, "_criterion", None)
    if crit is None:
        return
    number, title = crit
    entry = _criteria.setdefault(number, {"title": title, "passed": 0, "failed": []})
    if report.passed:
        entry["passed"] += 1
    else:
        entry["failed"].append(report.nodeid.split("::", 1)[-1])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result()._criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"[{status}] {number:>2}. {entry['title']} ({entry['passed']} checks passed"
        if entry["failed"]:
            line += f"; failed: {', '.join(entry['failed'])}"
        terminalreporter.write_line(line + ")")
