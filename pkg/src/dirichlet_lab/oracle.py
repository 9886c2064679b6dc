"""Independent L-values: Euler-Maclaurin Hurwitz zeta and digamma.

Nothing in here uses Gauss sums or any of the closed forms under test; the
L-series is regrouped by residue class, ``L(s, chi) = q^-s sum_a chi(a) zeta(s, a/q)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .characters import DirichletCharacter
from .exact import EPS, ComplexApprox, DomainError
from .special import bernoulli

# Euler-Maclaurin shift and number of Bernoulli corrections
EM_SHIFT = 30
EM_TERMS = 12

_B2J = tuple(float(bernoulli(2 * j)) for j in range(1, EM_TERMS + 2))
_FACT2J = tuple(float(math.factorial(2 * j)) for j in range(1, EM_TERMS + 2))


class Estimate(NamedTuple):
    value: float
    err: float


class PoleError(DomainError):
    """L(1, chi) requested for the principal character."""


def hurwitz_zeta(s: int, x) -> Estimate:
    """``zeta(s, x) = sum_{n>=0} (n + x)^-s`` for integer ``s >= 2``, ``x > 0``."""
    if s < 2:
        raise DomainError("hurwitz_zeta needs s >= 2; use digamma for s = 1")
    x = float(Fraction(x))
    if x <= 0:
        raise DomainError("hurwitz_zeta needs x > 0")
    head = math.fsum((n + x) ** -s for n in range(EM_SHIFT))
    a = EM_SHIFT + x
    tail = [a ** (1 - s) / (s - 1), 0.5 * a ** -s]
    rising = float(s)  # s (s+1) ... (s+2j-2)
    power = a ** (-s - 1)
    for j in range(1, EM_TERMS + 2):
        term = _B2J[j - 1] / _FACT2J[j - 1] * rising * power
        if j == EM_TERMS + 1:
            remainder = abs(term)
            break
        tail.append(term)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= a * a
    value = head + math.fsum(tail)
    return Estimate(value, remainder + 8 * EPS * abs(value))


def digamma(x) -> Estimate:
    """``psi(x)`` for ``x > 0`` by upward recurrence and the asymptotic series."""
    x = float(Fraction(x))
    if x <= 0:
        raise DomainError("digamma needs x > 0")
    shift = math.fsum(1.0 / (x + k) for k in range(EM_SHIFT))
    z = x + EM_SHIFT
    terms = [math.log(z), -0.5 / z]
    zz = z * z
    power = zz
    for j in range(1, EM_TERMS + 2):
        term = -_B2J[j - 1] / (2 * j * power)
        if j == EM_TERMS + 1:
            remainder = abs(term)
            break
        terms.append(term)
        power *= zz
    value = math.fsum(terms) - shift
    return Estimate(value, remainder + 8 * EPS * (abs(math.log(z)) + shift))


@dataclass(frozen=True)
class LValue:
    s: int
    q: int
    index: int
    value: ComplexApprox
    method: str  # "hurwitz" | "digamma" | "direct"


def l_value(chi: DirichletCharacter, s: int) -> LValue:
    """Ground-truth ``L(s, chi)`` for integer ``s >= 1``."""
    q = chi.q
    if s < 1:
        raise DomainError("l_value needs s >= 1")
    if s == 1 and chi.is_principal:
        raise PoleError("L(s, chi) has a pole at s = 1 for the principal character")
    re_terms, im_terms, err = [], [], 0.0
    for a in range(1, q + 1):
        c = chi(a)
        if c == 0:
            continue
        est = digamma(Fraction(a, q)) if s == 1 else hurwitz_zeta(s, Fraction(a, q))
        re_terms.append(c.real * est.value)
        im_terms.append(c.imag * est.value)
        err += est.err + 2 * EPS * abs(est.value)
    if s == 1:
        scale, method = -1.0 / q, "digamma"
    else:
        scale, method = float(q) ** -s, "hurwitz"
    z = complex(math.fsum(re_terms), math.fsum(im_terms)) * scale
    value = ComplexApprox.from_complex(z, err * abs(scale) + 4 * EPS * abs(z))
    return LValue(s, q, chi.index, value, method)


def l_direct(chi: DirichletCharacter, s: int, N: int) -> LValue:
    """Truncated series ``sum_{n<=N} chi(n)/n^s`` with the tail bound ``N^(1-s)/(s-1)``."""
    if s < 2:
        raise DomainError("l_direct needs s >= 2")
    q = chi.q
    n = np.arange(N, 0, -1, dtype=np.float64)  # smallest terms first
    weights = np.bincount((np.arange(N, 0, -1) % q), weights=n ** -s, minlength=q)
    vals = chi.values()
    z = complex(np.dot(vals, weights))
    tail = N ** (1 - s) / (s - 1)
    value = ComplexApprox.from_complex(z, tail + 2 * N * EPS * abs(z))
    return LValue(s, q, chi.index, value, "direct")


def mean_value_lhs(q: int, s: int, parity_sel: str) -> float:
    """``sum |L(s, chi)|^2`` over characters mod q of the selected parity.

    The principal character is part of the even family (and is skipped at s = 1).
    """
    from .characters import build_group

    want = {"even": 1, "odd": -1}[parity_sel]
    group = build_group(q)
    total = []
    for chi in group.characters():
        if chi.parity != want or (s == 1 and chi.is_principal):
            continue
        total.append(abs(l_value(chi, s).value) ** 2)
    return math.fsum(total)
