"""Fibonacci and Chebyshev polynomial families and their special values.

Each family has two independent constructions: the three-term recurrence and
the explicit binomial power form.  They must generate identical polynomials,
which the test suite checks for a long range of indices; everything downstream
may then rely on either construction.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .polynomials import Polynomial
from .scalars import binomial


class Basis(Enum):
    """The three triangular polynomial families handled by the library."""

    FIBONACCI = "fibonacci"
    CHEBYSHEV_T = "chebyshev-t"
    CHEBYSHEV_U = "chebyshev-u"


def c_norm(n: int) -> Fraction:
    """First-kind orthogonality normalizer: 2 at n = 0, otherwise 1."""
    return Fraction(2) if n == 0 else Fraction(1)


@lru_cache(maxsize=None)
def fibonacci_poly(n: int) -> Polynomial:
    """F_n by the recurrence F_{n+2} = x F_{n+1} + F_n, F_0 = 0, F_1 = 1.

    Degree n-1 and monic for n >= 1; F_0 is the zero polynomial.
    """
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if n == 0:
        return Polynomial.zero()
    if n == 1:
        return Polynomial.one()
    return Polynomial.x() * fibonacci_poly(n - 1) + fibonacci_poly(n - 2)


def fibonacci_poly_power_form(n: int) -> Polynomial:
    """F_n from the binomial sum over C(n-j-1, j) x^(n-2j-1).

    Independent of the recurrence; used as its construction oracle.
    """
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    coeffs = [Fraction(0)] * max(n, 1)
    for j in range((n - 1) // 2 + 1):
        coeffs[n - 2 * j - 1] = Fraction(binomial(n - j - 1, j))
    return Polynomial(coeffs)


@lru_cache(maxsize=None)
def chebyshev_t(n: int) -> Polynomial:
    """First-kind Chebyshev polynomial via T_n = 2x T_{n-1} - T_{n-2}."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if n == 0:
        return Polynomial.one()
    if n == 1:
        return Polynomial.x()
    return Polynomial((0, 2)) * chebyshev_t(n - 1) - chebyshev_t(n - 2)


@lru_cache(maxsize=None)
def chebyshev_u(n: int) -> Polynomial:
    """Second-kind Chebyshev polynomial via U_n = 2x U_{n-1} - U_{n-2}."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if n == 0:
        return Polynomial.one()
    if n == 1:
        return Polynomial((0, 2))
    return Polynomial((0, 2)) * chebyshev_u(n - 1) - chebyshev_u(n - 2)


def chebyshev_t_power_form(n: int) -> Polynomial:
    """T_n from its explicit power sum (n >= 1; T_0 = 1 directly)."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if n == 0:
        return Polynomial.one()
    coeffs = [Fraction(0)] * (n + 1)
    for r in range(n // 2 + 1):
        coeffs[n - 2 * r] = (
            Fraction(n, 2)
            * Fraction((-1) ** r, n - r)
            * binomial(n - r, r)
            * Fraction(2) ** (n - 2 * r)
        )
    return Polynomial(coeffs)


def chebyshev_u_power_form(n: int) -> Polynomial:
    """U_n from its explicit power sum."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    coeffs = [Fraction(0)] * (n + 1)
    for r in range(n // 2 + 1):
        coeffs[n - 2 * r] = Fraction((-1) ** r) * binomial(n - r, r) * Fraction(2) ** (n - 2 * r)
    return Polynomial(coeffs)


def fibonacci_number(n: int) -> int:
    """The n-th Fibonacci number, equal to F_n evaluated at 1."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fibonacci_deriv_at_1(q: int, n: int) -> Fraction:
    """q-th derivative of F_n at x = 1, by formal differentiation."""
    if q < 0 or n < 0:
        raise ValueError(f"q and n must be >= 0, got q={q}, n={n}")
    return fibonacci_poly(n).derivative(q)(Fraction(1))


def cheb_deriv_at_1(kind: Basis, q: int, n: int) -> Fraction:
    """q-th derivative of T_n or U_n at x = 1 from the closed-form product.

    Requires q >= 1 (the q = 0 values are the plain endpoint evaluations
    T_n(1) = 1 and U_n(1) = n + 1; evaluate the polynomial for those).
    """
    if q < 1:
        raise ValueError("closed form requires q >= 1; evaluate the polynomial for q = 0")
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if kind is Basis.CHEBYSHEV_T:
        out = Fraction(1)
        for i in range(q):
            out *= Fraction((n - i) * (n + i), 2 * i + 1)
        return out
    if kind is Basis.CHEBYSHEV_U:
        out = Fraction(n + 1)
        for i in range(q):
            out *= Fraction((n - i) * (n + i + 2), 2 * i + 3)
        return out
    raise ValueError(f"kind must be a Chebyshev family, got {kind}")


def basis_element_of_degree(basis: Basis, degree: int) -> Polynomial:
    """The unique member of the family with the given degree."""
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    if basis is Basis.FIBONACCI:
        return fibonacci_poly(degree + 1)
    if basis is Basis.CHEBYSHEV_T:
        return chebyshev_t(degree)
    return chebyshev_u(degree)


def index_for_degree(basis: Basis, degree: int) -> int:
    """Reporting index of the degree-d element: d+1 for F, d for T and U."""
    return degree + 1 if basis is Basis.FIBONACCI else degree


def index_prefix(basis: Basis) -> str:
    return {"fibonacci": "F", "chebyshev-t": "T", "chebyshev-u": "U"}[basis.value]
