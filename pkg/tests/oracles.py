"""Independent brute-force integrators used only by the tests.

These deliberately avoid the Pochhammer-ratio formula under test: the
one-variable integral expands (1-t)^q binomially, and the simplex integral
reduces one variable at a time.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def interval_integral(p: int, q: int) -> Fraction:
    """Integral of t^p (1-t)^q over [0,1], by binomial expansion."""
    return sum((Fraction((-1) ** j) * comb(q, j)) / (p + j + 1)
               for j in range(q + 1))


def simplex_integral(exponents: tuple[int, ...]) -> Fraction:
    """Integral of x^(a_1..a_d) (1-|x|)^(a_{d+1}) over T^d, d = len-1.

    Reduction: substituting x_1 = t and rescaling the remaining variables by
    (1-t) splits off a one-variable Beta factor with a Jacobian (1-t)^{d-1}.
    """
    *a, b = exponents
    if not a:
        return Fraction(1)
    rest = sum(a[1:]) + b + len(a) - 1
    return interval_integral(a[0], rest) * simplex_integral(tuple(a[1:]) + (b,))


def oracle_normalized_moment(gamma: tuple[int, ...], a: tuple[int, ...]) -> Fraction:
    """Normalized moment for integer exponents, computed the slow way."""
    shifted = tuple(g + e for g, e in zip(gamma, a))
    return simplex_integral(shifted) / simplex_integral(gamma)
