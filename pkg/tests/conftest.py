import pytest

from offworld_energy.constants import default_registry

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture
def record():
    """Record one acceptance-criterion line and assert it."""
    def _record(criterion: str, ok: bool, detail: str):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
