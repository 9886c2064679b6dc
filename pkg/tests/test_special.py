from __future__ import annotations

import math
import random
from fractions import Fraction
from math import comb

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from conftest import CATALAN
from dirichlet_lab.exact import DomainError, PiScalar
from dirichlet_lab.special import (
    bernoulli,
    bernoulli_poly,
    clausen,
    dedekind_sum,
    lemma2_cos_closed,
    lemma2_sin_closed,
    log_sin_integral,
    periodic_bernoulli,
    zeta_even,
)


def _akiyama_tanigawa(n):
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out  # B_1 = +1/2 in this convention


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_agrees_with_independent_algorithm():
    ref = _akiyama_tanigawa(60)
    for n in range(2, 61):
        assert bernoulli(n) == ref[n]


def test_bernoulli_properties():
    for k in range(1, 61):
        assert bernoulli(2 * k + 1) == 0
    for k in range(1, 40):
        assert (bernoulli(2 * k) > 0) == (k % 2 == 1)
    for n in range(2, 61):
        assert sum(comb(n, k) * bernoulli(k) for k in range(n)) == 0


def test_bernoulli_poly_examples():
    x = Fraction(3, 7)
    assert bernoulli_poly(1, x) == x - Fraction(1, 2)
    assert bernoulli_poly(2, 0) == Fraction(1, 6)
    assert bernoulli_poly(2, Fraction(1, 2)) == Fraction(-1, 12)


def test_periodic_bernoulli_examples():
    assert periodic_bernoulli(1, Fraction(7, 3)) == Fraction(-1, 6)
    assert periodic_bernoulli(3, 5) == 0
    x = Fraction(1, 4)
    assert periodic_bernoulli(2, x) == x * x - x + Fraction(1, 6) == Fraction(-1, 48)


@given(st.fractions(max_denominator=60).filter(lambda f: abs(f) < 50), st.integers(1, 10))
def test_periodic_bernoulli_is_periodic(x, n):
    assert periodic_bernoulli(n, x + 1) == periodic_bernoulli(n, x)


def test_dedekind_examples():
    assert dedekind_sum(1, 1, 3) == Fraction(1, 18)
    assert dedekind_sum(3, 1, 3) == 0
    assert dedekind_sum(2, 1, 5) == dedekind_sum(3, 1, 5)


def test_dedekind_exact_over_grid():
    for q in range(2, 21):
        for h in range(0, 21):
            for n in range(1, 5):
                assert isinstance(dedekind_sum(h, n, q), Fraction)


@pytest.mark.parametrize("k, denom", [(1, 6), (2, 90), (3, 945), (4, 9450)])
def test_zeta_even_examples(k, denom):
    assert zeta_even(k) == PiScalar.pi_power(2 * k, Fraction(1, denom))


def test_zeta_even_numeric():
    for k in range(1, 26):
        assert float(zeta_even(k)) == pytest.approx(float(mpmath.zeta(2 * k)), rel=1e-15)


def test_lemma2_sin_examples():
    assert lemma2_sin_closed(math.pi) == 0
    assert lemma2_sin_closed(math.pi / 2) == pytest.approx(math.pi / 4)
    n = np.arange(10 ** 6, 0, -1, dtype=float)
    series = math.fsum(np.sin(n * math.pi / 3) / n)
    assert abs(series - lemma2_sin_closed(math.pi / 3)) <= 2e-6


def test_lemma2_cos_examples():
    assert lemma2_cos_closed(math.pi) == pytest.approx(-math.log(2))
    assert abs(lemma2_cos_closed(math.pi / 3)) < 1e-15
    n = np.arange(1, 10 ** 6 + 2, dtype=float)
    partial = np.cumsum(np.cos(n * math.pi / 2) / n)
    averaged = (partial[-1] + partial[-2]) / 2
    assert abs(averaged - (-0.5 * math.log(2))) <= 1e-6
    assert lemma2_cos_closed(math.pi / 2) == pytest.approx(-0.5 * math.log(2), abs=1e-15)


@pytest.mark.parametrize("f", [lemma2_sin_closed, lemma2_cos_closed])
@pytest.mark.parametrize("x", [0.0, 2 * math.pi, -1.0, 7.0])
def test_lemma2_domain(f, x):
    with pytest.raises(DomainError):
        f(x)


def _catalan_series(terms=10 ** 6):
    k = np.arange(terms, dtype=float)
    partial = np.cumsum((-1.0) ** k / (2 * k + 1) ** 2)
    return (partial[-1] + partial[-2]) / 2


def test_clausen_examples():
    assert abs(clausen(math.pi)) < 1e-15
    assert abs(_catalan_series() - CATALAN) < 1e-13
    assert abs(clausen(math.pi / 2) - CATALAN) <= 1e-12
    assert abs(clausen(3 * math.pi / 2) + CATALAN) <= 1e-12
    assert clausen(0.0) == 0.0 and abs(clausen(2 * math.pi)) < 1e-15
    with pytest.raises(DomainError):
        clausen(-0.1)


def test_clausen_matches_truncated_series():
    rng = random.Random(20261016)
    N = 10 ** 5
    n = np.arange(N, 0, -1, dtype=float)
    for _ in range(20):
        theta = rng.uniform(0, 2 * math.pi)
        series = math.fsum(np.sin(n * theta) / n ** 2)
        assert abs(clausen(theta) - series) <= 1 / N + 1e-12


def _quad_log_sin(theta):
    f = lambda x: math.log(2 * math.sin(x / 2))
    if theta <= math.pi:
        val, _ = quad(f, 0, theta, limit=200, epsabs=1e-12, epsrel=1e-12)
        return val
    a, _ = quad(f, 0, math.pi, limit=200, epsabs=1e-12, epsrel=1e-12)
    b, _ = quad(f, math.pi, theta, limit=200, epsabs=1e-12, epsrel=1e-12, points=[2 * math.pi])
    return a + b


def test_log_sin_integral_examples():
    assert abs(log_sin_integral(math.pi / 2) + CATALAN) <= 1e-12
    assert abs(log_sin_integral(2 * math.pi)) < 1e-15
    assert abs(log_sin_integral(math.pi / 3) - _quad_log_sin(math.pi / 3)) <= 1e-9


@pytest.mark.parametrize("theta", np.linspace(0.3, 6.0, 10))
def test_log_sin_integral_quadrature_and_derivative(theta):
    assert abs(log_sin_integral(theta) - _quad_log_sin(theta)) <= 1e-9
    h = 1e-5
    fd = (log_sin_integral(theta + h) - log_sin_integral(theta - h)) / (2 * h)
    assert abs(fd - math.log(2 * math.sin(theta / 2))) <= 1e-6


@pytest.mark.parametrize("a, b", [(0.2, 1.0), (1.0, 3.0), (2.5, 5.9), (0.7, 6.1)])
def test_cos_closed_integrates_to_minus_clausen(a, b):
    val, _ = quad(lemma2_cos_closed, a, b, epsabs=1e-13, epsrel=1e-13)
    assert abs(val - (clausen(b) - clausen(a))) <= 1e-8


def test_corollary_proof_integral_is_not_minus_4pi_log2():
    true = log_sin_integral(math.pi / 4)
    assert abs(true - _quad_log_sin(math.pi / 4)) <= 1e-9
    assert abs(true - (-4 * math.pi * math.log(2))) > 7
