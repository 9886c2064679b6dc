"""Dirichlet character groups modulo q.

Characters are stored as integer exponents against the group exponent ``E``:
a unit ``n`` maps to ``exp(2*pi*i*k/E)`` with ``k = chi.log_table[n]``, and
non-units carry ``-1``.  Everything here is exact; complex values are only
produced on request.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .exact import DomainError, factorize, primitive_root, totient


@dataclass(frozen=True)
class Component:
    """One cyclic factor of the unit group, living modulo ``prime**exp``."""

    prime: int
    exp: int
    order: int
    generator: int  # residue mod prime**exp
    log: dict[int, int] = field(repr=False, compare=False)  # residue mod p^e -> exponent

    @property
    def modulus(self) -> int:
        return self.prime ** self.exp


def _odd_component(p: int, e: int) -> Component:
    m = p ** e
    g = primitive_root(p, e)
    log, x = {}, 1
    for k in range(m // p * (p - 1)):
        log[x] = k
        x = x * g % m
    return Component(p, e, len(log), g, log)


def _two_components(e: int) -> list[Component]:
    m = 2 ** e
    if e == 1:
        return []
    if e == 2:
        return [Component(2, 2, 2, 3, {1: 0, 3: 1})]
    sign_log, five_log = {}, {}
    x = 1
    for b in range(2 ** (e - 2)):
        for a, n in ((0, x), (1, (-x) % m)):
            sign_log[n] = a
            five_log[n] = b
        x = x * 5 % m
    return [Component(2, e, 2, m - 1, sign_log), Component(2, e, 2 ** (e - 2), 5, five_log)]


class CharacterGroup:
    """Full character group modulo ``q`` with precomputed discrete logs."""

    def __init__(self, q: int):
        if not isinstance(q, int) or q < 3:
            raise DomainError(f"modulus must be an integer >= 3, got {q!r}")
        if q > 10 ** 5:
            raise DomainError("modulus is limited to q <= 100000")
        self.q = q
        self.factorization = factorize(q)
        comps: list[Component] = []
        for p, e in self.factorization:
            comps.extend(_two_components(e) if p == 2 else [_odd_component(p, e)])
        self.components = tuple(comps)
        self.orders = tuple(c.order for c in comps)
        self.phi = totient(q)
        self.exponent = math.lcm(*self.orders) if comps else 1
        # unit residue -> exponent vector
        self.logs: dict[int, tuple[int, ...]] = {}
        for n in range(1, q):
            if math.gcd(n, q) == 1:
                self.logs[n] = tuple(c.log[n % c.modulus] for c in comps)

    def __repr__(self) -> str:
        return f"CharacterGroup(q={self.q}, orders={self.orders})"

    @cached_property
    def lifted_generators(self) -> tuple[int, ...]:
        """Generators lifted to residues mod q (1 on every other prime power)."""
        lifted = []
        for c in self.components:
            m, rest = c.modulus, self.q // c.modulus
            # CRT: x = gen mod m, x = 1 mod rest
            x = (c.generator * rest * pow(rest, -1, m) + m * pow(m, -1, rest)) % self.q \
                if rest > 1 else c.generator % self.q
            lifted.append(x)
        return tuple(lifted)

    def residue_from_exponents(self, vec) -> int:
        n = 1
        for g, v in zip(self.lifted_generators, vec):
            n = n * pow(g, v, self.q) % self.q
        return n

    def character(self, index: int) -> DirichletCharacter:
        if not 0 <= index < self.phi:
            raise DomainError(f"character index {index} out of range for q={self.q}")
        vec = []
        for order in reversed(self.orders):
            index, r = divmod(index, order)
            vec.append(r)
        return DirichletCharacter(self, tuple(reversed(vec)))

    def characters(self) -> list[DirichletCharacter]:
        return enumerate_characters(self)


@lru_cache(maxsize=512)
def build_group(q: int) -> CharacterGroup:
    return CharacterGroup(q)


def enumerate_characters(group: CharacterGroup) -> list[DirichletCharacter]:
    """All characters in canonical (lexicographic exponent-vector) order."""
    return [DirichletCharacter(group, vec)
            for vec in itertools.product(*(range(o) for o in group.orders))]


class DirichletCharacter:
    """A character given by its exponent vector against the group generators."""

    def __init__(self, group: CharacterGroup, exponents: tuple[int, ...]):
        if len(exponents) != len(group.orders) or any(
                not 0 <= c < o for c, o in zip(exponents, group.orders)):
            raise DomainError(f"bad exponent vector {exponents} for {group}")
        self.group = group
        self.exponents = tuple(exponents)
        E = group.exponent
        scale = [E // o for o in group.orders]
        table = [-1] * group.q
        for n, vec in group.logs.items():
            table[n] = sum(c * s * v for c, s, v in zip(exponents, scale, vec)) % E
        self.log_table = tuple(table)

    @property
    def q(self) -> int:
        return self.group.q

    @property
    def index(self) -> int:
        idx = 0
        for c, o in zip(self.exponents, self.group.orders):
            idx = idx * o + c
        return idx

    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)

    @property
    def order(self) -> int:
        """Multiplicative order of the character."""
        E = self.group.exponent
        g = 0
        for k in self.log_table:
            if k > 0:
                g = math.gcd(g, k)
        return 1 if g == 0 else E // math.gcd(g, E)

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    def conj(self) -> DirichletCharacter:
        return DirichletCharacter(
            self.group, tuple((-c) % o for c, o in zip(self.exponents, self.group.orders)))

    def __eq__(self, other) -> bool:
        return (isinstance(other, DirichletCharacter) and other.q == self.q
                and other.exponents == self.exponents)

    def __hash__(self) -> int:
        return hash((self.q, self.exponents))

    def __repr__(self) -> str:
        return f"DirichletCharacter(q={self.q}, index={self.index}, exponents={self.exponents})"

    def __call__(self, n: int) -> complex:
        k = self.log_table[n % self.q]
        return 0j if k < 0 else unit_root(k, self.group.exponent)

    def values(self) -> np.ndarray:
        """Complex values at n = 0..q-1."""
        return np.array([self(n) for n in range(self.q)], dtype=complex)

    @cached_property
    def parity(self) -> int:
        return parity(self)

    @cached_property
    def conductor(self) -> int:
        return conductor(self)

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.q


def unit_root(k: int, m: int) -> complex:
    """``exp(2*pi*i*k/m)`` with exact values on the axes."""
    k %= m
    if 4 * k % m == 0:
        return (1, 1j, -1, -1j)[4 * k // m]
    return cmath.exp(2j * math.pi * k / m)


def chi_eval(chi: DirichletCharacter, n: int) -> Fraction | None:
    """Exact value as a rational exponent ``t`` meaning ``exp(2*pi*i*t)``; None is zero."""
    k = chi.log_table[n % chi.q]
    return None if k < 0 else Fraction(k, chi.group.exponent)


def parity(chi: DirichletCharacter) -> int:
    k = chi.log_table[chi.q - 1]
    return 1 if k == 0 else -1


def conductor(chi: DirichletCharacter) -> int:
    q = chi.q
    for f in (d for d in range(1, q + 1) if q % d == 0):
        if all(chi.log_table[n] == 0 for n in range(1, q, f) if chi.log_table[n] >= 0):
            return f
    return q


def cyclotomic_polynomial(m: int) -> list[int]:
    """Integer coefficients of the m-th cyclotomic polynomial, low degree first."""
    return list(_cyclotomic(m))


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num = _exact_divide(num, list(_cyclotomic(d)))
    return tuple(num)


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert not any(num), "non-exact cyclotomic division"
    return out


def root_sum_is_zero(exponents, m: int) -> bool:
    """Whether ``sum_k exp(2*pi*i*e_k/m)`` vanishes, decided in Z[x]/Phi_m."""
    poly = [0] * m
    for e in exponents:
        poly[e % m] += 1
    phi = _cyclotomic(m)
    deg = len(phi) - 1
    # phi is monic
    for i in range(len(poly) - 1, deg - 1, -1):
        c = poly[i]
        if c:
            for j, d in enumerate(phi):
                poly[i - deg + j] -= c * d
    return not any(poly[:deg])
