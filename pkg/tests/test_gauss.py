from __future__ import annotations

import cmath
import math

import numpy as np
import pytest

from conftest import real_character
from dirichlet_lab.characters import build_group
from dirichlet_lab.gauss import check_separability, gauss_sum, gauss_table


def _brute_gauss(chi, z):
    return sum(chi(k) * cmath.exp(2j * math.pi * k * z / chi.q) for k in range(chi.q))


def test_gauss_sum_examples(chi4):
    assert abs(gauss_sum(chi4, 1).value - 2j) < 1e-15
    chi3 = build_group(3).character(1)
    assert abs(gauss_sum(chi3, 1).value - 1j * math.sqrt(3)) < 1e-15
    assert abs(gauss_sum(build_group(4).character(0), 2).value + 2) < 1e-15


def test_gauss_table_examples(chi4, quad5):
    table = gauss_table(chi4)
    assert np.allclose(table.values, [2j, 0, -2j, 0], atol=1e-15)
    assert abs(table[1].value - 2j) < 1e-15
    assert abs(gauss_table(quad5)[1].value - math.sqrt(5)) < 1e-14


@pytest.mark.parametrize("q", [7, 12, 16, 21, 36])
def test_table_matches_brute_force(q):
    for chi in build_group(q).characters():
        table = gauss_table(chi)
        for z in range(1, q + 1):
            assert abs(table.values[z - 1] - _brute_gauss(chi, z)) < 1e-12
            assert abs(gauss_sum(chi, z).value - table.values[z - 1]) < 1e-13


@pytest.mark.parametrize("q", range(3, 51))
def test_table_symmetry_and_row_sum(q):
    for chi in build_group(q).characters():
        t = gauss_table(chi)
        assert abs(t.row_sum()) <= 1e-10
        assert np.all(np.abs(t.values) <= q + 1e-9)
        bar = gauss_table(chi.conj())
        for z in range(1, q):
            # G(-z, chi) = chi(-1) G(z, chi) and conj G(z, chi) = G(-z, conj chi)
            assert abs(t.values[q - z - 1] - chi.parity * t.values[z - 1]) <= 1e-10
            assert abs(t.values[z - 1].conjugate() - bar.values[q - z - 1]) <= 1e-10


def test_separability_examples(chi4):
    assert check_separability(chi4) <= 1e-12
    for chi in build_group(5).characters()[1:]:
        assert check_separability(chi) <= 1e-10
    induced = next(c for c in build_group(8).characters() if c.exponents == (1, 0))
    assert induced.conductor == 4
    assert check_separability(induced) > 0.5


@pytest.mark.parametrize("q", [11, 24, 45, 64, 97])
def test_primitive_tables_separate(q):
    for chi in build_group(q).characters():
        if chi.is_primitive:
            assert check_separability(chi) <= 1e-9
