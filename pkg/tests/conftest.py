"""Shared fixtures, including the acceptance-criterion reporter.

Each acceptance test wraps its body in the `criterion` context manager;
the collected PASS/FAIL lines are echoed in a dedicated section of the
terminal summary so the run leaves one visible line per criterion.
"""

from contextlib import contextmanager

import pytest

_lines: list[str] = []


@pytest.fixture
def criterion():
    @contextmanager
    def _criterion(number: int, title: str):
        try:
            yield
        except BaseException:
            _lines.append(f"FAIL criterion {number}: {title}")
            raise
        _lines.append(f"PASS criterion {number}: {title}")

    return _criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_lines):
            terminalreporter.write_line(line)
