import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sbraid import rewrite  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def exhaustive_engines():
    """Route every division through class enumeration for the duration of a test."""
    rewrite.configure(exhaustive=True)
    yield
    rewrite.configure()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
