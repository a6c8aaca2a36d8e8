"""Shared test plumbing: the acceptance verdict report.

Criterion tests append one line each; the terminal-summary hook prints
them after capture ends so the verdicts show under any pytest invocation.
"""

import pytest

ACCEPTANCE_VERDICTS = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_VERDICTS


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_VERDICTS:
        terminalreporter.ensure_newline()
        terminalreporter.section("acceptance verdicts")
        for line in ACCEPTANCE_VERDICTS:
            terminalreporter.line(line)
