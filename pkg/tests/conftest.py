import itertools

import pytest

from agtop import instances
from agtop.search import SearchSpec, enumerate_ag_groupoids
from agtop.table import AGTable

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {line}")


def all_tables(n):
    """Every n x n table, brute force."""
    for cells in itertools.product(range(n), repeat=n * n):
        yield AGTable(tuple(cells[i * n:(i + 1) * n] for i in range(n)))


def brute_left_invertive(t):
    n = t.order
    T = t.table
    return all(T[T[a][b]][c] == T[T[c][b]][a] for a in range(n) for b in range(n) for c in range(n))


_CORPUS = {}


def labeled_corpus(n):
    if n not in _CORPUS:
        _CORPUS[n] = tuple(enumerate_ag_groupoids(SearchSpec(n)))
    return _CORPUS[n]


@pytest.fixture
def z3():
    return instances.cyclic_subtraction(3)


@pytest.fixture
def z6():
    return instances.cyclic_multiplication(6)


@pytest.fixture
def z2():
    return instances.cyclic_addition(2)


@pytest.fixture
def trivial():
    return instances.trivial()


@pytest.fixture
def left_zero():
    return instances.left_zero(2)


@pytest.fixture
def right_zero():
    return instances.right_zero(2)
