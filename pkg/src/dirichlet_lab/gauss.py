"""Gauss sums ``G(z, chi) = sum_{k=0}^{q-1} chi(k) exp(2 pi i k z / q)``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .characters import DirichletCharacter, unit_root
from .exact import EPS, ComplexApprox


@lru_cache(maxsize=256)
def _roots(m: int) -> np.ndarray:
    roots = np.array([unit_root(k, m) for k in range(m)], dtype=complex)
    roots.setflags(write=False)
    return roots


def _phase_grid(chi: DirichletCharacter, zs: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Integer phases of chi(k) e(kz/q) over a common root-of-unity order M."""
    q, E = chi.q, chi.group.exponent
    M = math.lcm(q, E)
    logs = np.array(chi.log_table, dtype=np.int64)
    units = np.nonzero(logs >= 0)[0]
    k = units.astype(np.int64)
    phases = (logs[units][None, :] * (M // E)
              + (np.outer(zs % q, k) % q) * (M // q)) % M
    return phases, units, M


def _sum_err(q: int) -> float:
    # q unit-modulus terms, each rounded once, plus summation roundoff
    return 4 * q * EPS


def gauss_sum(chi: DirichletCharacter, z: int) -> ComplexApprox:
    phases, _, M = _phase_grid(chi, np.array([z], dtype=np.int64))
    roots = _roots(M)[phases[0]]
    value = complex(math.fsum(roots.real), math.fsum(roots.imag))
    return ComplexApprox.from_complex(value, _sum_err(chi.q))


@dataclass(frozen=True)
class GaussTable:
    """``G(j, chi)`` for j = 1..q; ``values[j-1]`` holds ``G(j, chi)``."""

    character: DirichletCharacter
    values: np.ndarray
    err: float  # per-entry absolute bound

    def __getitem__(self, j: int) -> ComplexApprox:
        return ComplexApprox.from_complex(self.values[j - 1], self.err)

    def __len__(self) -> int:
        return len(self.values)

    def row_sum(self) -> complex:
        return complex(self.values.sum())


def gauss_table(chi: DirichletCharacter) -> GaussTable:
    q = chi.q
    zs = np.arange(1, q + 1, dtype=np.int64)
    phases, _, M = _phase_grid(chi, zs)
    values = _roots(M)[phases].sum(axis=1)
    values.setflags(write=False)
    return GaussTable(chi, values, _sum_err(q))


def check_separability(chi: DirichletCharacter, table: GaussTable | None = None) -> float:
    """max_j |G(j, chi) - conj(chi(j)) G(1, chi)|; near zero iff the table factors."""
    table = table or gauss_table(chi)
    g1 = table.values[0]
    return max(abs(table.values[j - 1] - chi(j).conjugate() * g1) for j in range(1, chi.q + 1))
