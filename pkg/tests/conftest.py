"""Collects the acceptance-criterion report lines and prints them at the end of the run."""

import pytest

REPORT: list[str] = []


@pytest.fixture
def report():
    return REPORT


def pytest_terminal_summary(terminalreporter):
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in sorted(REPORT, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
