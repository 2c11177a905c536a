from pathlib import Path

import hypothesis.strategies as st
import pytest

from boundary_axioms.setcore import OperatorTable, Universe

FIXTURES = Path(__file__).parent / "fixtures"

_acceptance_lines: list[str] = []


@st.composite
def tables(draw, n):
    size = 1 << n
    values = draw(st.lists(st.integers(0, size - 1), min_size=size, max_size=size))
    return OperatorTable(Universe(n), tuple(values))


def any_table(max_n=4):
    return st.integers(0, max_n).flatmap(tables)


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture(scope="session")
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
