import pytest

_REPORT: list[str] = []


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion."""
    def _record(name, ok, detail=""):
        _REPORT.append(f"[{'PASS' if ok else 'FAIL'}] {name}{': ' + detail if detail else ''}")
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if _REPORT:
        terminalreporter.section("acceptance criteria")
        for line in _REPORT:
            terminalreporter.write_line(line)
