import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from looplab import catalog  # noqa: E402
from looplab.enumerator import enumerate_all  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def loops_upto6():
    """Every normalized loop of order 1..6 (9471 tables)."""
    return [t for n in range(1, 7) for t in enumerate_all(n)]


@pytest.fixture(scope="session")
def catalog_loops():
    entries = [catalog.o16(), catalog.q8(), catalog.smallest_cc(), catalog.klein4(),
               catalog.cyclic(1), catalog.cyclic(6), catalog.cyclic(8), catalog.elementary_abelian(8)]
    return {e.name: e.table for e in entries}


@pytest.fixture(scope="session")
def o16():
    return catalog.o16().table


@pytest.fixture(scope="session")
def q8():
    return catalog.q8().table


@pytest.fixture(scope="session")
def cc6():
    return catalog.smallest_cc().table


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
