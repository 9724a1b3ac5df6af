import re

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    n, name = int(m.group(1)), m.group(2)
    if report.when == "call" or report.outcome != "passed":
        prev = _CRITERIA.get(n)
        if prev is None or prev[1] == "PASS":
            _CRITERIA[n] = (name, "PASS" if report.outcome == "passed" else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        name, status = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n} ({name.replace('_', ' ')}): {status}")
