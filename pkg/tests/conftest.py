"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""

import pytest

_RESULTS = {}


class AcceptanceRecorder:
    def __init__(self, key, title):
        self.key, self.title = key, title

    def check(self, passed, detail):
        prev = _RESULTS.get(self.key)
        ok = bool(passed) and (prev is None or prev[1])
        details = (prev[2] + "; " if prev else "") + detail
        _RESULTS[self.key] = (self.title, ok, details)
        return bool(passed)


@pytest.fixture
def acceptance():
    return AcceptanceRecorder


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_RESULTS):
        title, ok, detail = _RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key:>2}. {title}: {detail}")
