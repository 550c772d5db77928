"""Exact rational scalars: rising factorials, binomials, parsing helpers.

Every number in the package is a ``fractions.Fraction``; nothing here (or
anywhere else) rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]


def as_fraction(value: Rational | str) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def pochhammer(a: Rational, k: int) -> Fraction:
    """Rising factorial a*(a+1)*...*(a+k-1); equals 1 when k == 0."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    a = as_fraction(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def binomial(n: int, k: int) -> Fraction:
    """Binomial coefficient with the convention binom(n, k) = 0 for k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial needs nonnegative arguments")
    if k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def factorial(n: int) -> Fraction:
    return Fraction(math.factorial(n))


def product_factorial(exponents: Iterable[int]) -> Fraction:
    """Product of factorials over a multi-index."""
    out = Fraction(1)
    for e in exponents:
        out *= math.factorial(e)
    return out


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p"; raises ValueError on malformed input."""
    return Fraction(text.strip())


def format_rational(value: Rational) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(as_fraction(value))
