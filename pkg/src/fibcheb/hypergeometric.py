"""Terminating Gauss hypergeometric series over exact rationals.

Only terminating series are supported: at least one upper parameter must be a
nonpositive integer, in which case the sum is finite and exactly computable.
When both upper parameters are nonpositive integers the series truncates at
the smaller of the two indices (the standard convention, and the one every
connection coefficient here relies on).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .scalars import RationalLike
from .sequences import fibonacci_number


class NonTerminatingError(ValueError):
    """Neither upper parameter is a nonpositive integer."""


class ZeroDenominatorError(ValueError):
    """The lower parameter hits a nonpositive integer before the series terminates."""


def _as_nonpositive_int(value: Fraction) -> int | None:
    if value.denominator == 1 and value <= 0:
        return -int(value)
    return None


@dataclass(frozen=True)
class Hyp2F1:
    """Parameter record (a, b; c; z) of a Gauss series intended to terminate."""

    a: Fraction
    b: Fraction
    c: Fraction
    z: Fraction

    def __init__(self, a: RationalLike, b: RationalLike, c: RationalLike, z: RationalLike):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "z", Fraction(z))

    @property
    def is_terminating(self) -> bool:
        return (
            _as_nonpositive_int(self.a) is not None
            or _as_nonpositive_int(self.b) is not None
        )

    def termination_index(self) -> int:
        """The index K of the last nonvanishing term."""
        stops = [k for k in (_as_nonpositive_int(self.a), _as_nonpositive_int(self.b)) if k is not None]
        if not stops:
            raise NonTerminatingError(
                f"2F1({self.a}, {self.b}; {self.c}; {self.z}) does not terminate: "
                "neither upper parameter is a nonpositive integer"
            )
        return min(stops)


@lru_cache(maxsize=None)
def eval_2f1(series: Hyp2F1) -> Fraction:
    """Exact sum of the terminating series sum_k (a)_k (b)_k z^k / ((c)_k k!).

    Raises NonTerminatingError for series without a nonpositive-integer upper
    parameter, and ZeroDenominatorError if (c)_k vanishes at or before the
    termination index (which signals a misuse, never a term to skip).
    """
    K = series.termination_index()
    total = Fraction(0)
    term = Fraction(1)
    for k in range(K + 1):
        total += term
        if k == K:
            break
        ck = series.c + k
        if ck == 0:
            raise ZeroDenominatorError(
                f"2F1({series.a}, {series.b}; {series.c}; {series.z}): "
                f"lower parameter vanishes at term {k + 1} of {K}"
            )
        term = term * (series.a + k) * (series.b + k) * series.z / (ck * (k + 1))
    return total


def hyp2f1(a: RationalLike, b: RationalLike, c: RationalLike, z: RationalLike) -> Fraction:
    """Convenience wrapper: build the parameter record and evaluate it."""
    return eval_2f1(Hyp2F1(a, b, c, z))


class FibonacciSeriesVariant(Enum):
    """The two hypergeometric representations of the Fibonacci numbers."""

    ARG_MINUS_4 = "arg-minus-4"
    ARG_5 = "arg-5"


def fibonacci_as_2f1(n: int, variant: FibonacciSeriesVariant) -> Fraction:
    """F_n as a terminating 2F1 value.

    ARG_MINUS_4:  F_n = 2F1((1-n)/2, (2-n)/2; 1-n; -4)
    ARG_5:        F_n = (n / 2^(n-1)) 2F1((1-n)/2, (2-n)/2; 3/2; 5)

    One of the upper parameters is a nonpositive integer for every n >= 1, so
    both forms are exactly summable; by construction they must equal the
    integer-recurrence Fibonacci number.
    """
    if n < 1:
        raise ValueError(f"representation defined for n >= 1, got {n}")
    a = Fraction(1 - n, 2)
    b = Fraction(2 - n, 2)
    if variant is FibonacciSeriesVariant.ARG_MINUS_4:
        return hyp2f1(a, b, 1 - n, -4)
    if variant is FibonacciSeriesVariant.ARG_5:
        return Fraction(n, 2 ** (n - 1)) * hyp2f1(a, b, Fraction(3, 2), 5)
    raise ValueError(f"unknown variant {variant}")


def fibonacci_as_2f1_both(n: int) -> tuple[Fraction, Fraction, int]:
    """Both representations plus the recurrence value, for cross-checking."""
    return (
        fibonacci_as_2f1(n, FibonacciSeriesVariant.ARG_MINUS_4),
        fibonacci_as_2f1(n, FibonacciSeriesVariant.ARG_5),
        fibonacci_number(n),
    )


def pfaff_transform(series: Hyp2F1) -> tuple[Fraction, Hyp2F1]:
    """Linear transformation 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)).

    Returns the exact rational prefactor (1-z)^(-a) and the transformed
    parameter record; ``prefactor * eval_2f1(transformed)`` equals the value
    of the original series.  Requires ``a`` to be a nonpositive integer (so
    the prefactor is a plain rational power) and z != 1.
    """
    neg_a = _as_nonpositive_int(series.a)
    if neg_a is None:
        raise ValueError(
            f"transform requires a nonpositive integer first parameter, got a={series.a}"
        )
    if series.z == 1:
        raise ValueError("transform undefined at z = 1")
    prefactor = (1 - series.z) ** neg_a
    transformed = Hyp2F1(
        series.a,
        series.c - series.b,
        series.c,
        series.z / (series.z - 1),
    )
    return prefactor, transformed
