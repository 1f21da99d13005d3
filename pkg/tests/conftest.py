import random

import pytest

_ACCEPTANCE = []


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion for the summary."""
    lines = []

    def record(label, ok, detail=""):
        lines.append((label, ok, detail))
        return ok

    yield record
    _ACCEPTANCE.extend(lines)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
