import pytest

from sphereflame.gas import hydrogen_air_mixture

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def h2air():
    return hydrogen_air_mixture(1e5, 283.0)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
