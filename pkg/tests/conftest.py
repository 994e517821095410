import sys

import pytest

from bergekit.catalog import named
from bergekit.matrix import BitMatrix


@pytest.fixture
def lit():
    return BitMatrix.parse_literal


@pytest.fixture
def G1():
    return named("G1")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
