import sys
from pathlib import Path

import pytest

from splitmat import FieldMatrix, SplitSpec, matroid_from_matrix
from splitmat import data

sys.path.insert(0, str(Path(__file__).parent))

R8_ROWS = [
    [1, 0, 0, 0, 2, 1, 1, 1],
    [0, 1, 0, 0, 1, 2, 1, 1],
    [0, 0, 1, 0, 1, 1, 2, 1],
    [0, 0, 0, 1, 1, 1, 1, 2],
]

# connected ternary matroid whose {1, 4} splitting disconnects
SD_ROWS = [
    [1, 0, 0, 0, 0, 1, 1, 2],
    [0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 0, 1, 2, 1, 1, 0],
    [0, 1, 1, 0, 0, 0, 0, 0],
]


def S(*xs):
    return frozenset(str(x) for x in xs)


@pytest.fixture
def r8():
    return matroid_from_matrix(FieldMatrix.from_rows(R8_ROWS, 3))


@pytest.fixture
def sd():
    return matroid_from_matrix(FieldMatrix.from_rows(SD_ROWS, 3))


@pytest.fixture
def spec35():
    return SplitSpec(3, 5, 1)


@pytest.fixture
def spec14():
    return SplitSpec(1, 4, 1)


@pytest.fixture
def data_dir():
    return Path(str(data.path("r8"))).parent


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
