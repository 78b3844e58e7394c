import pytest

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_line():
    """Record one summary line per acceptance criterion; shown at the end of the run."""
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
