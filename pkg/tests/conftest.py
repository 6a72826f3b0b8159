import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from heckeinv import oracle
from heckeinv.diagrams import Partition
from heckeinv.laurent import LaurentPoly

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def _irrep(parts):
    return oracle.build_irrep(Partition(parts))


@pytest.fixture(scope="session")
def irrep():
    """Cached oracle irreps keyed by partition."""

    def get(g):
        return _irrep(tuple(g))

    return get


@pytest.fixture(scope="session")
def q():
    return LaurentPoly.q()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
