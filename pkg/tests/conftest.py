import functools

import pytest

from schnyder.oracle import all_realizers
from schnyder.realizer import compute_realizer, parse_realizer
from schnyder.triangulation import parse_triangulation

K4_TEXT = """\
n 4
outer 0 1 2
rot 0: 1 3 2
rot 1: 0 2 3
rot 2: 0 3 1
rot 3: 0 1 2
"""

F5_TEXT = """\
n 5
outer 0 1 2
rot 0: 1 4 3 2
rot 1: 2 3 4 0
rot 2: 0 3 1
rot 3: 2 0 4 1
rot 4: 3 0 1
"""

# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture
def k4():
    return parse_triangulation(K4_TEXT)


@pytest.fixture
def f5():
    return parse_triangulation(F5_TEXT)


@pytest.fixture
def k4_real(k4):
    return compute_realizer(k4)


@pytest.fixture
def f5_real(f5):
    return compute_realizer(f5)


@functools.lru_cache(maxsize=None)
def realizers_of(n):
    return tuple(all_realizers(n))


def realizers_upto(n):
    """All realizers with 4..n vertices (cached across tests)."""
    out = []
    for k in range(4, n + 1):
        out.extend(realizers_of(k))
    return tuple(out)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
