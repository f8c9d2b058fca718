import re

_acceptance_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = re.search(r"test_acceptance\.py::test_criterion_(\d+)",
                      report.nodeid)
    if match:
        _acceptance_results[int(match.group(1))] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance_results):
        verdict = "PASS" if _acceptance_results[num] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}")
