"""Constructors for the classical polynomial families on the simplex.

Everything is generated from the weighted-form differentiation engine: shift
the weight exponents, differentiate, divide the weight back out.  The one
direct-summation family is the monic ("monomial") basis, whose defining
formula is already a finite sum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonIntegrableWeight, ZeroDenominator
from .polynomials import Exponents, Polynomial, box_indices, monomials_of_degree
from .scalars import Rational, as_fraction, binomial, factorial, format_rational, pochhammer, product_factorial
from .weighted import ParamVector, WeightedForm


@dataclass
class Basis:
    """A labeled list of polynomials keyed by multi-index (or block tag)."""

    dim: int
    params: ParamVector
    label: str
    elements: list[tuple[tuple, Polynomial]] = field(default_factory=list)

    def polys(self) -> list[Polynomial]:
        return [p for _, p in self.elements]

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {
            "family": self.label,
            "d": self.dim,
            "gamma": self.params.to_json(),
            "elements": [{"key": _json_key(key), "poly": poly.to_json()}
                         for key, poly in self.elements],
        }


def _json_key(key: tuple) -> list:
    return [list(k) if isinstance(k, tuple) else k for k in key]


# -- Rodrigues-type constructions ------------------------------------------

def rodrigues_element(gamma: ParamVector, nu: Exponents) -> Polynomial:
    """Differentiate the nu-shifted weight and divide the weight back out."""
    d = gamma.d
    if len(nu) != d or any(n < 0 for n in nu):
        raise ValueError(f"bad multi-index {nu}")
    n = sum(nu)
    alpha = [g + k for g, k in zip(gamma.entries[:-1], nu)]
    form = WeightedForm.single(d, 1, alpha, gamma.last + n)
    for axis, times in enumerate(nu):
        for _ in range(times):
            form = form.derivative(axis)
    return form.divide_by_weight(gamma)


def permuted_element(gamma: ParamVector, order: tuple[int, ...], nu: Exponents) -> Polynomial:
    """Rodrigues construction along a rearranged coordinate list.

    `order` lists d distinct indices from {0..d}; index d stands for the
    dependent coordinate 1-|x|.  The omitted index c carries exponent |nu|,
    and the slot operators are d/dx_s when c == d, else -d/dx_c for the slot
    holding 1-|x| and d/dx_s - d/dx_c otherwise.
    """
    d = gamma.d
    if len(order) != d or len(set(order)) != d or not set(order) <= set(range(d + 1)):
        raise ValueError(f"bad coordinate order {order}")
    if len(nu) != d or any(k < 0 for k in nu):
        raise ValueError(f"bad multi-index {nu}")
    (excluded,) = set(range(d + 1)) - set(order)
    n = sum(nu)
    shift = [Fraction(0)] * (d + 1)
    for slot, s in enumerate(order):
        shift[s] += nu[slot]
    shift[excluded] += n
    exps = [g + s for g, s in zip(gamma.entries, shift)]
    form = WeightedForm.single(d, 1, exps[:-1], exps[-1])
    for slot, s in enumerate(order):
        if excluded == d:
            op = [(s, 1)]
        elif s == d:
            op = [(excluded, -1)]
        else:
            op = [(s, 1), (excluded, -1)]
        for _ in range(nu[slot]):
            form = form.directional(op)
    return form.divide_by_weight(gamma)


def rodrigues_basis(gamma: ParamVector, n: int) -> Basis:
    elems = [(nu, rodrigues_element(gamma, nu))
             for nu in monomials_of_degree(gamma.d, n)]
    return Basis(gamma.d, gamma, "rodrigue", elems)


def permuted_basis(gamma: ParamVector, order: tuple[int, ...], n: int) -> Basis:
    elems = [(nu, permuted_element(gamma, order, nu))
             for nu in monomials_of_degree(gamma.d, n)]
    label = "permuted[" + ",".join(str(s) for s in order) + "]"
    return Basis(gamma.d, gamma, label, elems)


# -- monic (monomial) basis -------------------------------------------------

def monomial_element(gamma: ParamVector, nu: Exponents) -> Polynomial:
    """The monic orthogonal companion of x^nu: x^nu plus lower-degree terms."""
    d = gamma.d
    if len(nu) != d or any(k < 0 for k in nu):
        raise ValueError(f"bad multi-index {nu}")
    n = sum(nu)
    s = gamma.total + d
    den = pochhammer(s, 2 * n)
    if den == 0:
        raise ZeroDenominator(f"({format_rational(s)})_{2 * n} vanishes")
    top = [pochhammer(g + 1, k) for g, k in zip(gamma.entries[:-1], nu)]
    terms = {}
    for m in box_indices(nu):
        coef = Fraction((-1) ** (n + sum(m)))
        for i in range(d):
            low = pochhammer(gamma.entries[i] + 1, m[i])
            if low == 0:
                raise ZeroDenominator(
                    f"({format_rational(gamma.entries[i] + 1)})_{m[i]} vanishes")
            coef *= binomial(nu[i], m[i]) * top[i] / low
        coef *= pochhammer(s, n + sum(m)) / den
        terms[m] = coef
    return Polynomial(d, terms)


def monomial_basis(gamma: ParamVector, n: int) -> Basis:
    elems = [(nu, monomial_element(gamma, nu))
             for nu in monomials_of_degree(gamma.d, n)]
    return Basis(gamma.d, gamma, "monomial", elems)


def biorthogonal_constant(gamma: ParamVector, nu: Exponents) -> Fraction:
    """Normalized pairing of the Rodrigues and monic elements with equal index.

    Convention actually satisfied by the constructions in this package
    (fixed by integration by parts and verified by brute force in the tests):

        <P_nu, V_nu> = (-1)^{|nu|} nu! prod_i (g_i+1)_{nu_i} (g_{d+1}+1)_{|nu|}
                        / (|g|+d+1)_{2|nu|}

    with the pairing Dirichlet-normalized.  The sign alternates with the
    degree because the Rodrigues construction here carries no (-1)^{|nu|}
    prefactor; off-diagonal pairings vanish identically.
    """
    d = gamma.d
    n = sum(nu)
    value = Fraction((-1) ** n) * product_factorial(nu)
    for g, k in zip(gamma.entries[:-1], nu):
        value *= pochhammer(g + 1, k)
    value *= pochhammer(gamma.last + 1, n)
    return value / pochhammer(gamma.total + d + 1, 2 * n)


# -- the second-order operator ----------------------------------------------

def apply_operator(gamma: ParamVector, f: Polynomial) -> Polynomial:
    """Image of f under the simplex Jacobi operator

        sum_i x_i(1-x_i) d_i^2 f - 2 sum_{i<j} x_i x_j d_i d_j f
            + sum_i (g_i + 1 - (|g|+d+1) x_i) d_i f.

    Polynomial in the parameters, so entries equal to -1 are allowed.
    """
    d = f.dim
    if gamma.d != d:
        raise ValueError("dimension mismatch")
    s = gamma.total + d + 1
    out = Polynomial.zero(d)
    firsts = [f.partial(i) for i in range(d)]
    for i in range(d):
        xi = Polynomial.variable(d, i)
        out = out + xi * (1 - xi) * firsts[i].partial(i)
        out = out + (gamma.entries[i] + 1 - s * xi) * firsts[i]
        for j in range(i + 1, d):
            xj = Polynomial.variable(d, j)
            out = out - 2 * xi * xj * firsts[i].partial(j)
    return out


def eigenvalue(gamma: ParamVector, n: int) -> Fraction:
    return -n * (n + gamma.total + gamma.d)


def eigencheck(gamma: ParamVector, f: Polynomial, n: int) -> bool:
    """True iff L f == -n(n+|g|+d) f exactly."""
    return (apply_operator(gamma, f) - eigenvalue(gamma, n) * f).is_zero


# -- one-variable Jacobi families --------------------------------------------

def jacobi_shifted(n: int, alpha: Rational, beta: Rational) -> Polynomial:
    """Jacobi polynomial on [0,1], orthogonal against (1-x)^alpha x^beta,
    normalized as (1-x)^{-a} x^{-b} d^n/dx^n [(1-x)^{n+a} x^{n+b}]."""
    return rodrigues_element(ParamVector([as_fraction(beta), as_fraction(alpha)]), (n,))


def jacobi_p(n: int, alpha: Rational, beta: Rational) -> Polynomial:
    """Classical Jacobi polynomial on [-1,1] with the standard normalization."""
    shifted = jacobi_shifted(n, alpha, beta)
    half_up = Polynomial(1, {(0,): Fraction(1, 2), (1,): Fraction(1, 2)})
    return shifted.substitute(0, half_up) * (Fraction((-1) ** n) / factorial(n))


def jacobi_norm(n: int, alpha: Rational, beta: Rational) -> Fraction:
    """Normalized square norm of jacobi_p(n):
    (a+1)_n (b+1)_n (a+b+n+1) / (n! (a+b+2)_n (a+b+2n+1))."""
    a, b = as_fraction(alpha), as_fraction(beta)
    if a <= -1 or b <= -1:
        raise NonIntegrableWeight("jacobi_norm needs alpha, beta > -1")
    num = pochhammer(a + 1, n) * pochhammer(b + 1, n) * (a + b + n + 1)
    den = factorial(n) * pochhammer(a + b + 2, n) * (a + b + 2 * n + 1)
    return num / den


def jacobi_negative_one_beta(n: int, beta: Rational) -> Polynomial:
    """The alpha = -1 family on [-1,1]: P_0 = 1 and, for n >= 1,
    P_n = ((n+beta)/n) * (x-1)/2 * P_{n-1}^{(1,beta)}."""
    b = as_fraction(beta)
    if n == 0:
        return Polynomial.constant(1, 1)
    x = Polynomial.variable(1, 0)
    return (x - 1) * ((b + n) / (2 * n)) * jacobi_p(n - 1, 1, b)


def jacobi_negative_one_one(n: int, lam1: Rational = 1, lam2: Rational = 1) -> Polynomial:
    """The alpha = beta = -1 family on [-1,1]: P_0 = 1, P_1 = x + mu with
    mu = (lam2-lam1)/(lam1+lam2), and P_n = (x^2-1)/4 * P_{n-2}^{(1,1)}."""
    l1, l2 = as_fraction(lam1), as_fraction(lam2)
    x = Polynomial.variable(1, 0)
    if n == 0:
        return Polynomial.constant(1, 1)
    if n == 1:
        if l1 + l2 == 0:
            raise ZeroDenominator("lam1 + lam2 must be nonzero")
        return x + (l2 - l1) / (l1 + l2)
    return (x * x - 1) * Fraction(1, 4) * jacobi_p(n - 2, 1, 1)


def jacobi_ode_residual(f: Polynomial, n: int, alpha: Rational, beta: Rational) -> Polynomial:
    """(1-x^2) f'' + [b - a - (a+b+2)x] f' + n(a+b+n+1) f, on [-1,1]."""
    a, b = as_fraction(alpha), as_fraction(beta)
    x = Polynomial.variable(1, 0)
    fp = f.partial(0)
    return ((1 - x * x) * fp.partial(0)
            + (b - a - (a + b + 2) * x) * fp
            + n * (a + b + n + 1) * f)


# -- permuted-family closed forms used by the d = 2 suites -------------------

def triangle_q(k: int, n: int, gamma: ParamVector) -> Polynomial:
    """The swapped-variable family on the triangle: order (y, x)."""
    if gamma.d != 2:
        raise ValueError("triangle family needs d = 2")
    return permuted_element(gamma, (1, 0), (k, n - k))


def triangle_r(k: int, n: int, gamma: ParamVector) -> Polynomial:
    """The reflected family on the triangle: order (1-x-y, y)."""
    if gamma.d != 2:
        raise ValueError("triangle family needs d = 2")
    return permuted_element(gamma, (2, 1), (k, n - k))


def all_orders(d: int) -> list[tuple[int, ...]]:
    """Every ordering of d indices out of {0..d}, lexicographically."""
    return sorted(itertools.permutations(range(d + 1), d))
