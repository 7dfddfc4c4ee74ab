"""Shared pytest configuration.

Prints one PASS/FAIL line per acceptance criterion in the terminal summary,
matching test functions named ``test_criterion_NN_*``.
"""

import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            match = _CRITERION.search(report.nodeid)
            if match:
                outcomes[(int(match.group(1)), match.group(2))] = status == "passed"
    if not outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for (number, name), ok in sorted(outcomes.items()):
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{verdict} criterion {number:2d}: {name}")
