import pytest

from lltunnel.grid import random_grid


@pytest.fixture(scope="session")
def grid():
    """The standard 200-point scenario grid (seed 42)."""
    return random_grid(200, 42)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
