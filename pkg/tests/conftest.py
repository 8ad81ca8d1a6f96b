"""Shared pytest hooks.

The acceptance battery in test_acceptance.py gets one line per check at the
end of the run, including the checks that are documented as failing on the
shipped reference data.
"""

_ACCEPTANCE_FILE = "test_acceptance.py"
_labels: dict[str, str] = {}
_results: dict[str, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        if _ACCEPTANCE_FILE in str(getattr(item, "fspath", "")):
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _labels[item.nodeid] = doc


def pytest_runtest_logreport(report):
    if report.nodeid not in _labels:
        return
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if hasattr(report, "wasxfail"):
        outcome = "FAIL (documented)" if report.skipped else "UNEXPECTED PASS"
    elif report.passed:
        outcome = "PASS"
    elif report.failed:
        outcome = "FAIL"
    else:
        outcome = "SKIP"
    _results[report.nodeid] = outcome


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance battery")
    for nodeid in sorted(_results):
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(
            "%-18s %s: %s" % (_results[nodeid], name, _labels[nodeid])
        )
