"""Exact normalized integration against simplex weights.

All integrals are Dirichlet-normalized: each value is the integral divided by
the total mass of its own base weight, which keeps every number rational for
rational exponents.  The closed form used here is

    (integral of x^a (1-|x|)^{a_{d+1}} dW_g) / (mass of W_g)
        = prod_i (g_i + 1)_{a_i} / (|g| + d + 1)_{|a|}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import NonIntegrableWeight
from .polynomials import FaceId, Polynomial
from .scalars import format_rational, pochhammer
from .weighted import ParamVector


@lru_cache(maxsize=None)
def _moment(entries: tuple[Fraction, ...], a: tuple[int, ...]) -> Fraction:
    num = Fraction(1)
    for g, e in zip(entries, a):
        num *= pochhammer(g + 1, e)
    den = pochhammer(sum(entries) + len(entries), sum(a))
    return num / den


def normalized_moment(gamma: ParamVector, a: tuple[int, ...]) -> Fraction:
    """Normalized moment of x^(a_1..a_d) (1-|x|)^(a_{d+1}) against W_gamma."""
    if not gamma.is_integrable:
        raise NonIntegrableWeight("weight exponents ("
                                  + ",".join(format_rational(g) for g in gamma.entries)
                                  + ") are not all > -1")
    if len(a) != gamma.d + 1 or any(e < 0 for e in a):
        raise ValueError(f"bad moment index {a}")
    return _moment(gamma.entries, tuple(int(e) for e in a))


def integral(f: Polynomial, gamma: ParamVector) -> Fraction:
    """Normalized integral of a polynomial against W_gamma over T^d."""
    if f.dim != gamma.d:
        raise ValueError("dimension mismatch")
    if not gamma.is_integrable:
        raise NonIntegrableWeight("weight exponents ("
                                  + ",".join(format_rational(g) for g in gamma.entries)
                                  + ") are not all > -1")
    total = Fraction(0)
    for exp, coef in f.items():
        total += coef * _moment(gamma.entries, exp + (0,))
    return total


def inner_product(f: Polynomial, g: Polynomial, gamma: ParamVector) -> Fraction:
    """Normalized L^2(W_gamma) pairing of two polynomials."""
    return integral(f * g, gamma)


def face_inner_product(f: Polynomial, g: Polynomial, face: FaceId,
                       face_gamma: ParamVector) -> Fraction:
    """Restrict both arguments to a face and pair them in the face's own weight."""
    if face.dim < 1:
        raise ValueError("face must have dimension >= 1; use vertex_eval at points")
    if face_gamma.d != face.dim:
        raise ValueError("face weight has wrong dimension")
    return inner_product(face.restrict(f), face.restrict(g), face_gamma)


def vertex_eval(f: Polynomial, j: int) -> Fraction:
    """Evaluate at vertex e_j of T^d; e_0 is the origin."""
    if not 0 <= j <= f.dim:
        raise ValueError(f"vertex index {j} out of range")
    point = [Fraction(1) if i == j - 1 else Fraction(0) for i in range(f.dim)]
    return f.evaluate(point)
