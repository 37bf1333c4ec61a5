"""Exact scalar arithmetic and combinatorial primitives.

Every coefficient in the library is an exact rational; ``fractions.Fraction``
already provides the canonical reduced form (positive denominator, gcd 1,
zero as 0/1), so it is used directly as the rational scalar type.  This module
adds the Gaussian rational (exact complex) scalar and the small combinatorial
helpers every coefficient formula is built from.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 for k < 0 or k > n.

    The out-of-range convention keeps sum-over-m formulas free of explicit
    boundary cases.  Negative n is rejected.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(a: RationalLike, k: int) -> Fraction:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1."""
    if k < 0:
        raise ValueError(f"pochhammer requires k >= 0, got k={k}")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def double_factorial(n: int) -> int:
    """n!! for n >= -1, with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial undefined for n={n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def sqrt_pi_over_gamma(q: int, offset: RationalLike) -> Fraction:
    """Exact value of sqrt(pi) / Gamma(q + offset) for offset 1/2 or 3/2.

    Gamma at half-integers is a double-factorial multiple of sqrt(pi):

        Gamma(q + 1/2) = (2q-1)!! sqrt(pi) / 2^q
        Gamma(q + 3/2) = (2q+1)!! sqrt(pi) / 2^(q+1)

    so the ratio is the rational 2^q/(2q-1)!! resp. 2^(q+1)/(2q+1)!!.  Working
    with the ratio instead of Gamma itself keeps the derivative identities
    entirely inside exact rationals; no irrational scalar exists anywhere in
    the library.
    """
    if q < 0:
        raise ValueError(f"q must be nonnegative, got {q}")
    offset = Fraction(offset)
    if offset == HALF:
        return Fraction(2**q, double_factorial(2 * q - 1))
    if offset == THREE_HALVES:
        return Fraction(2 ** (q + 1), double_factorial(2 * q + 1))
    raise ValueError(f"offset must be 1/2 or 3/2, got {offset}")


def format_rational(x: RationalLike) -> str:
    """Serialize as "p/q", with the denominator omitted when it is 1."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class GaussianRational:
    """A complex number with exact rational real and imaginary parts.

    Arithmetic is a field: add, subtract, multiply, divide, integer powers.
    A value with zero imaginary part compares (and hashes) equal to the plain
    rational it represents, so Gaussian and rational results can be checked
    against each other directly.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- helpers -----------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "GaussianRational | None":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value, 0)
        return None

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n2 = other.norm_squared()
        if n2 == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        conj = other.conjugate()
        prod = self * conj
        return GaussianRational(prod.re / n2, prod.im / n2)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return GaussianRational(1) / self ** (-exponent)
        out = GaussianRational(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def to_text(self) -> str:
        """Serialize as "p/q+r/s*i" (real form "p/q" when the imaginary part is 0)."""
        if self.im == 0:
            return format_rational(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}*i"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))


I = GaussianRational(0, 1)
