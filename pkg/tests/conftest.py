import pytest

from sl2spectrum.bootstrap import derive_corrections


@pytest.fixture(scope="session")
def tables6():
    return derive_corrections(6)


@pytest.fixture(scope="session")
def tables8():
    return derive_corrections(8)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
