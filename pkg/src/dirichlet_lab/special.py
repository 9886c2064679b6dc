"""Bernoulli numbers and polynomials, zeta at even integers, the two
Fourier series with elementary sums, the Clausen function, and generalized
Dedekind sums."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exact import DomainError, PiScalar, Rational

_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Exact ``B_n`` with ``B_1 = -1/2``.

    Uses ``B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k``, which is the relation
    ``B_n = sum_k C(n, k) B_k`` rearranged for its top term.
    """
    if n < 0:
        raise DomainError("bernoulli index must be >= 0")
    if n > 200:
        raise DomainError("bernoulli index is limited to n <= 200")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        s = sum(comb(m + 1, k) * _BERNOULLI[k] for k in range(m))
        _BERNOULLI.append(-s / (m + 1))
    return _BERNOULLI[n]


def bernoulli_poly(n: int, x: Rational) -> Fraction:
    x = Fraction(x)
    return sum((comb(n, k) * bernoulli(k) * x ** (n - k) for k in range(n + 1)), Fraction(0))


def periodic_bernoulli(n: int, x: Rational) -> Fraction:
    """``B_n`` of the fractional part of ``x``, and zero at integers."""
    if n < 1:
        raise DomainError("periodic_bernoulli needs n >= 1")
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return bernoulli_poly(n, x - math.floor(x))


def dedekind_sum(h: int, n: int, q: int) -> Fraction:
    """Generalized Dedekind sum ``sum_{a=1..q} Bbar_n(a/q) * Bbar_n(a*h/q)``."""
    if n < 1 or q < 2:
        raise DomainError("dedekind_sum needs n >= 1 and q >= 2")
    return sum((periodic_bernoulli(n, Fraction(a, q)) * periodic_bernoulli(n, Fraction(a * h, q))
                for a in range(1, q + 1)), Fraction(0))


@lru_cache(maxsize=None)
def zeta_even(k: int) -> PiScalar:
    """``zeta(2k) = (-1)^(k+1) B_2k (2 pi)^(2k) / (2 (2k)!)`` as a single pi-power."""
    if not 1 <= k <= 50:
        raise DomainError("zeta_even needs 1 <= k <= 50")
    coeff = (-1) ** (k + 1) * bernoulli(2 * k) * 2 ** (2 * k) / (2 * math.factorial(2 * k))
    return PiScalar.pi_power(2 * k, coeff)


def _check_open_interval(x: float) -> None:
    if not 0.0 < x < 2 * math.pi:
        raise DomainError(f"x must lie in (0, 2*pi), got {x}")


def lemma2_sin_closed(x: float) -> float:
    """Closed form of ``sum sin(nx)/n`` on (0, 2pi)."""
    _check_open_interval(x)
    return (math.pi - x) / 2


def lemma2_cos_closed(x: float) -> float:
    """Closed form of ``sum cos(nx)/n`` on (0, 2pi)."""
    _check_open_interval(x)
    return -math.log(2 * math.sin(x / 2))


# zeta(2n)/(n(2n+1)) for the Clausen power series; ratio (theta/2pi)^2 <= 1/4
_CLAUSEN_TERMS = 40
_CLAUSEN_COEFFS = tuple(
    float(zeta_even(n)) / (n * (2 * n + 1)) for n in range(1, _CLAUSEN_TERMS + 1))


def clausen(theta: float) -> float:
    """``Cl_2(theta) = sum sin(n theta)/n^2`` on [0, 2pi], absolute error < 1e-14.

    Power series about 0 on [0, pi]; the rest comes from ``Cl_2(2pi - t) = -Cl_2(t)``.
    """
    if not 0.0 <= theta <= 2 * math.pi:
        raise DomainError(f"theta must lie in [0, 2*pi], got {theta}")
    if theta > math.pi:
        return -clausen(2 * math.pi - theta)
    if theta == 0.0:
        return 0.0
    u = (theta / (2 * math.pi)) ** 2
    series = 0.0
    for c in reversed(_CLAUSEN_COEFFS):
        series = series * u + c
    series *= u * theta
    return theta - theta * math.log(theta) + series


def log_sin_integral(theta: float) -> float:
    """``integral_0^theta log(2 sin(x/2)) dx``; the endpoint singularity is integrable."""
    return -clausen(theta)
