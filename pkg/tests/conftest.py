import pytest

from noncyclic.classify import sweep

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def records16():
    return sweep(16)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
