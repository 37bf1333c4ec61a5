"""Connection coefficients between the Fibonacci and Chebyshev families.

Four directions are generated directly from their closed-form coefficient
sums (kept verbatim, prefactors included, so a transcription slip cannot hide
behind algebraic simplification), and an independent triangular-elimination
oracle recovers the same expansion from the polynomials alone.  The two
routes must agree term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .hypergeometric import hyp2f1
from .polynomials import Polynomial
from .scalars import binomial
from .sequences import (
    Basis,
    basis_element_of_degree,
    c_norm,
    chebyshev_t,
    chebyshev_u,
    fibonacci_poly,
    index_for_degree,
    index_prefix,
)


class Direction(Enum):
    """Which family is expanded in which basis."""

    T_IN_F = "t-in-f"
    U_IN_F = "u-in-f"
    F_IN_T = "f-in-t"
    F_IN_U = "f-in-u"

    @property
    def target_basis(self) -> Basis:
        if self in (Direction.T_IN_F, Direction.U_IN_F):
            return Basis.FIBONACCI
        return Basis.CHEBYSHEV_T if self is Direction.F_IN_T else Basis.CHEBYSHEV_U

    @property
    def min_index(self) -> int:
        # The T/U-in-F formulas are stated for source index >= 1 only.
        return 1 if self in (Direction.T_IN_F, Direction.U_IN_F) else 0

    def source_polynomial(self, j: int) -> Polynomial:
        if self is Direction.T_IN_F:
            return chebyshev_t(j)
        if self is Direction.U_IN_F:
            return chebyshev_u(j)
        return fibonacci_poly(j + 1)


@dataclass(frozen=True)
class ExpansionTerm:
    m: int
    target_index: int
    coefficient: Fraction

    def target_label(self, basis: Basis) -> str:
        return f"{index_prefix(basis)}_{self.target_index}"


@dataclass(frozen=True)
class Expansion:
    """Expansion of one source polynomial over a target family.

    Terms are indexed both by the summation index m and by the target family
    index, since the closed forms are m-indexed while verification works by
    degree.
    """

    j: int
    direction: Direction
    terms: tuple[ExpansionTerm, ...]

    def coefficients_by_index(self) -> dict[int, Fraction]:
        return {t.target_index: t.coefficient for t in self.terms}

    def reconstruct(self) -> Polynomial:
        """Sum coefficient * basis element; must equal the source polynomial."""
        basis = self.direction.target_basis
        total = Polynomial.zero()
        for t in self.terms:
            degree = t.target_index - 1 if basis is Basis.FIBONACCI else t.target_index
            total = total + basis_element_of_degree(basis, degree) * t.coefficient
        return total

    def source_polynomial(self) -> Polynomial:
        return self.direction.source_polynomial(self.j)


def _coefficient(j: int, m: int, direction: Direction) -> Fraction:
    if direction is Direction.T_IN_F:
        return (
            Fraction(j)
            * (-1) ** m
            * binomial(j - m, j - 2 * m)
            * Fraction(2) ** (j - 2 * m - 1)
            / (j - m)
            * hyp2f1(-m, j - m, j - 2 * m + 2, -4)
        )
    if direction is Direction.U_IN_F:
        return (
            Fraction(2) ** j
            * (-1) ** (m + 1)
            * binomial(j, m)
            * Fraction(-j + 2 * m - 1, j - m + 1)
            * hyp2f1(-m, -j + m - 1, -j, Fraction(-1, 4))
        )
    if direction is Direction.F_IN_T:
        return (
            Fraction(1) / c_norm(j - 2 * m)
            * binomial(j - m, j - 2 * m)
            * Fraction(2) ** (-j + 2 * m + 1)
            * hyp2f1(-m, j - m + 1, j - 2 * m + 1, Fraction(-1, 4))
        )
    return (
        Fraction(1, 2**j)
        * binomial(j, m)
        * Fraction(j - 2 * m + 1, j - m + 1)
        * hyp2f1(-m, -j + m - 1, -j, -4)
    )


@lru_cache(maxsize=None)
def expand(j: int, direction: Direction) -> Expansion:
    """Connection coefficients of the degree-j source over the target family.

    The coefficient of each target element is evaluated verbatim from the
    closed-form sum for the chosen direction; the target index is j-2m+1 for
    Fibonacci targets and j-2m for Chebyshev targets, m = 0 .. floor(j/2).
    """
    if j < direction.min_index:
        raise ValueError(f"{direction.value} expansion requires j >= {direction.min_index}, got {j}")
    fib_target = direction.target_basis is Basis.FIBONACCI
    terms = tuple(
        ExpansionTerm(
            m,
            (j - 2 * m + 1) if fib_target else (j - 2 * m),
            _coefficient(j, m, direction),
        )
        for m in range(j // 2 + 1)
    )
    return Expansion(j, direction, terms)


def oracle_expand(p: Polynomial, basis: Basis) -> list[tuple[int, Fraction]]:
    """Expand ``p`` over a triangular family by leading-term elimination.

    Each family has exactly one member per degree, so repeatedly subtracting
    the leading-coefficient-scaled element of matching degree yields the
    unique expansion without solving a linear system.  Independent of the
    closed-form coefficient route.  Returns (index, coefficient) pairs from
    the top degree down to 0, zero coefficients included.
    """
    out: list[tuple[int, Fraction]] = []
    rest = p
    for degree in range(p.degree, -1, -1):
        elem = basis_element_of_degree(basis, degree)
        coeff = rest.coefficient(degree) / elem.leading_coefficient
        out.append((index_for_degree(basis, degree), coeff))
        if coeff != 0:
            rest = rest - elem * coeff
    if not rest.is_zero:
        raise AssertionError("triangular elimination left a nonzero remainder")
    return out


@lru_cache(maxsize=None)
def d_coefficient(j: int, m: int) -> Fraction:
    """The inner series value 2F1(-m, -j+m-1; -j; -4) used by the recurrence check."""
    return hyp2f1(-m, -j + m - 1, -j, -4)


def lemma_recurrence_holds(j: int, m: int) -> bool:
    """Check the four-term recurrence satisfied by the d(j, m) series values.

    Evaluates, exactly,

        4 C(j-2, m-1)(j-2m+1)(j-m+1) d(j-2, m-1)
          + C(j-1, m-1)(j-2m+2)(j-m) d(j-1, m-1)
          + C(j-1, m)(j-2m)(j-m+1) d(j-1, m)
          - C(j, m)(j-m)(j-2m+1) d(j, m)

    and reports whether it is zero.  Terms whose binomial factor vanishes are
    dropped without evaluating their series value (whose indices would be out
    of range), so the m = 0 column holds trivially.
    """

    def term(bin_n: int, bin_k: int, scale: int, dj: int, dm: int) -> Fraction:
        b = binomial(bin_n, bin_k) if bin_n >= 0 else 0
        if b == 0:
            return Fraction(0)
        return b * scale * d_coefficient(dj, dm)

    total = (
        term(j - 2, m - 1, 4 * (j - 2 * m + 1) * (j - m + 1), j - 2, m - 1)
        + term(j - 1, m - 1, (j - 2 * m + 2) * (j - m), j - 1, m - 1)
        + term(j - 1, m, (j - 2 * m) * (j - m + 1), j - 1, m)
        - term(j, m, (j - m) * (j - 2 * m + 1), j, m)
    )
    return total == 0
