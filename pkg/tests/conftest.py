from __future__ import annotations

import math

import pytest

from dirichlet_lab.characters import build_group

CATALAN = 0.91596559417721901505


def real_character(q: int, parity: int, order: int = 2):
    """First character mod q of the given parity and order."""
    for chi in build_group(q).characters():
        if chi.parity == parity and chi.order == order:
            return chi
    raise LookupError((q, parity, order))


@pytest.fixture
def chi4():
    return build_group(4).character(1)


@pytest.fixture
def quad5():
    return real_character(5, 1)


def brute_series(f, n_terms: int) -> float:
    return math.fsum(f(n) for n in range(n_terms, 0, -1))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
