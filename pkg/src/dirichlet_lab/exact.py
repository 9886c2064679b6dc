"""Exact arithmetic: pi-graded scalars and polynomials, error-tracked complex
values, and the small amount of integer machinery the character groups need.

Rationals are :class:`fractions.Fraction` throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]

# 50 digits; every PiScalar -> float conversion goes through this one rational.
PI_DIGITS = "3.14159265358979323846264338327950288419716939937510"
PI_FRACTION = Fraction(PI_DIGITS)

EPS = 2.0 ** -52


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


# ---------------------------------------------------------------------------
# integers

def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n`` by trial division, primes ascending."""
    if n < 2:
        raise DomainError(f"factorize needs n >= 2, got {n}")
    if n > 2 ** 63:
        raise DomainError("factorize is limited to n <= 2**63")
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def totient(n: int) -> int:
    if n == 1:
        return 1
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def primitive_root(p: int, e: int = 1) -> int:
    """Smallest generator of the unit group modulo ``p**e`` (``p`` an odd prime)."""
    if p % 2 == 0 or not is_prime(p):
        raise DomainError(f"primitive_root needs an odd prime, got {p}")
    if e < 1:
        raise DomainError("exponent must be >= 1")
    m = p ** e
    if m > 2 ** 31:
        raise DomainError("p**e must be <= 2**31")
    phi = m // p * (p - 1)
    cofactors = [phi // r for r, _ in factorize(phi)] if phi > 1 else []
    for g in range(2, m):
        if g % p == 0:
            continue
        if all(pow(g, c, m) != 1 for c in cofactors):
            return g
    raise AssertionError("unreachable: odd prime powers are cyclic")


# ---------------------------------------------------------------------------
# pi-graded scalars

class PiScalar:
    """Exact value ``sum_k c_k * pi**k`` with rational ``c_k``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Rational] | None = None):
        clean = {}
        for k, c in (terms or {}).items():
            if k < 0:
                raise DomainError("pi exponents must be non-negative")
            c = Fraction(c)
            if c:
                clean[k] = c
        self._terms = tuple(sorted(clean.items()))

    @classmethod
    def rational(cls, c: Rational) -> PiScalar:
        return cls({0: c})

    @classmethod
    def pi_power(cls, k: int, c: Rational = 1) -> PiScalar:
        return cls({k: c})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, k: int) -> Fraction:
        return self.terms.get(k, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        out = self.terms
        for k, c in other._terms:
            out[k] = out.get(k, 0) + c
        return PiScalar(out)

    __radd__ = __add__

    def __neg__(self) -> PiScalar:
        return PiScalar({k: -c for k, c in self._terms})

    def __sub__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for k1, c1 in self._terms:
            for k2, c2 in other._terms:
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return PiScalar(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _as_scalar(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def exact(self) -> Fraction:
        """Rational value with pi replaced by its 50-digit approximation."""
        return sum((c * PI_FRACTION ** k for k, c in self._terms), Fraction(0))

    def __float__(self) -> float:
        return float(self.exact())

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self._terms:
            unit = "" if k == 0 else ("pi" if k == 1 else f"pi^{k}")
            if not unit:
                parts.append(str(c))
            elif c == 1:
                parts.append(unit)
            else:
                parts.append(f"({c})*{unit}")
        return " + ".join(parts)


def _as_scalar(value) -> PiScalar:
    if isinstance(value, PiScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return PiScalar.rational(value)
    return NotImplemented


# ---------------------------------------------------------------------------
# polynomials in x with PiScalar coefficients

class PiPoly:
    """Sparse polynomial in ``x``; coefficients are :class:`PiScalar`."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, PiScalar | Rational] | None = None):
        clean = {}
        for d, c in (coeffs or {}).items():
            if d < 0:
                raise DomainError("degrees must be non-negative")
            c = _as_scalar(c)
            if not c.is_zero():
                clean[d] = c
        self._coeffs = tuple(sorted(clean.items()))

    @classmethod
    def monomial(cls, degree: int, coeff: PiScalar | Rational = 1) -> PiPoly:
        return cls({degree: coeff})

    @property
    def coeffs(self) -> dict[int, PiScalar]:
        return dict(self._coeffs)

    def coefficient(self, degree: int) -> PiScalar:
        return self.coeffs.get(degree, PiScalar())

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return self._coeffs[-1][0] if self._coeffs else -1

    def __add__(self, other):
        if not isinstance(other, PiPoly):
            return NotImplemented
        out = self.coeffs
        for d, c in other._coeffs:
            out[d] = out[d] + c if d in out else c
        return PiPoly(out)

    def __neg__(self) -> PiPoly:
        return PiPoly({d: -c for d, c in self._coeffs})

    def __sub__(self, other):
        if not isinstance(other, PiPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: PiScalar | Rational) -> PiPoly:
        factor = _as_scalar(factor)
        return PiPoly({d: c * factor for d, c in self._coeffs})

    def derivative(self) -> PiPoly:
        return PiPoly({d - 1: c * d for d, c in self._coeffs if d > 0})

    def eval_at_pi_multiple(self, r: Rational) -> PiScalar:
        """Substitute ``x = r*pi`` exactly."""
        r = Fraction(r)
        total = PiScalar()
        for d, c in self._coeffs:
            total = total + c * PiScalar.pi_power(d, r ** d)
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, PiPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "PiPoly(0)"
        parts = [f"[{c}]*x^{d}" for d, c in reversed(self._coeffs)]
        return "PiPoly(" + " + ".join(parts) + ")"


def pipoly_derivative(p: PiPoly) -> PiPoly:
    return p.derivative()


def pipoly_eval_at_pi_multiple(p: PiPoly, r: Rational) -> PiScalar:
    return p.eval_at_pi_multiple(r)


# ---------------------------------------------------------------------------
# complex values with an absolute error bound

@dataclass(frozen=True)
class ComplexApprox:
    """Complex float with a conservative absolute error bound ``err``."""

    re: float
    im: float = 0.0
    err: float = 0.0

    def __post_init__(self):
        for name in ("re", "im", "err"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not self.err >= 0.0:
            raise DomainError("error bound must be non-negative")

    @classmethod
    def from_complex(cls, z: complex, err: float = 0.0) -> ComplexApprox:
        z = complex(z)
        return cls(z.real, z.imag, err)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return abs(self.value)

    def conjugate(self) -> ComplexApprox:
        return ComplexApprox(self.re, -self.im, self.err)

    def __add__(self, other):
        if isinstance(other, ComplexApprox):
            z = self.value + other.value
            return ComplexApprox.from_complex(z, self.err + other.err + EPS * abs(z))
        if isinstance(other, (int, float, complex)):
            z = self.value + other
            return ComplexApprox.from_complex(z, self.err + EPS * abs(z))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> ComplexApprox:
        return ComplexApprox(-self.re, -self.im, self.err)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ComplexApprox):
            z = self.value * other.value
            err = (abs(self) * other.err + abs(other) * self.err
                   + self.err * other.err + 2 * EPS * abs(z))
            return ComplexApprox.from_complex(z, err)
        if isinstance(other, (int, float, complex)):
            z = self.value * other
            return ComplexApprox.from_complex(z, abs(other) * self.err + 2 * EPS * abs(z))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            return self * (1 / other)
        return NotImplemented

    def distance(self, other: ComplexApprox | complex) -> float:
        target = other.value if isinstance(other, ComplexApprox) else complex(other)
        return abs(self.value - target)


def dot(weights: Iterable[complex], values: Iterable[complex], err_values: float = 0.0,
        err_weights: float = 0.0) -> ComplexApprox:
    """Compensated dot product with a running error bound.

    ``err_values`` and ``err_weights`` are per-entry absolute bounds on the inputs.
    """
    weights = [complex(w) for w in weights]
    values = [complex(v) for v in values]
    products = [w * v for w, v in zip(weights, values)]
    total = complex(math.fsum(p.real for p in products), math.fsum(p.imag for p in products))
    err = 0.0
    for w, v in zip(weights, values):
        err += abs(w) * err_values + abs(v) * err_weights + err_values * err_weights
        err += 4 * EPS * abs(w) * abs(v)
    return ComplexApprox.from_complex(total, err + EPS * abs(total))
