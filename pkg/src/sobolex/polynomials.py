"""Sparse exact polynomials in d variables, with the face machinery of T^d.

A polynomial is a mapping exponent-tuple -> Fraction.  Variables are indexed
0..d-1; the extra index d always refers to the hyperplane 1 - |x| = 0 when a
face of the simplex is described.  Terms serialize in graded-lex order
(total degree first, then lexicographic on the exponent tuple).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .scalars import Rational, as_fraction, format_rational, parse_rational

Exponents = tuple[int, ...]


def graded_lex_key(exp: Exponents) -> tuple[int, Exponents]:
    return (sum(exp), exp)


class Polynomial:
    """Immutable-by-convention sparse polynomial over the rationals."""

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[Exponents, Rational] | Iterable[tuple[Exponents, Rational]] = ()):
        if dim < 0:
            raise ValueError("dimension must be >= 0")
        self.dim = dim
        acc: dict[Exponents, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coef in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != dim or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for dimension {dim}")
            c = acc.get(exp, Fraction(0)) + as_fraction(coef)
            if c:
                acc[exp] = c
            else:
                acc.pop(exp, None)
        self._terms = acc

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "Polynomial":
        return cls(dim)

    @classmethod
    def constant(cls, dim: int, value: Rational) -> "Polynomial":
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def variable(cls, dim: int, axis: int) -> "Polynomial":
        if not 0 <= axis < dim:
            raise ValueError(f"axis {axis} out of range for dimension {dim}")
        exp = tuple(1 if i == axis else 0 for i in range(dim))
        return cls(dim, {exp: 1})

    @classmethod
    def monomial(cls, dim: int, exp: Sequence[int], coef: Rational = 1) -> "Polynomial":
        return cls(dim, {tuple(exp): coef})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def constant_value(self) -> Fraction:
        if self._terms and self.degree() > 0:
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.dim, Fraction(0))

    def items(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: graded_lex_key(t[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if self.is_zero:
            return "Polynomial(0)"
        bits = []
        for exp, coef in self.sorted_terms():
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}"
                            for i, e in enumerate(exp) if e)
            bits.append(f"{format_rational(coef)}{'*' + mono if mono else ''}")
        return "Polynomial(" + " + ".join(bits) + ")"

    # -- ring operations ---------------------------------------------------

    def _check_dim(self, other: "Polynomial") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Polynomial | Rational") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.dim, other)
        self._check_dim(other)
        return Polynomial(self.dim, list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.dim, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | Rational") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.dim, other)
        return self + (-other)

    def __rsub__(self, other: Rational) -> "Polynomial":
        return Polynomial.constant(self.dim, other) - self

    def __mul__(self, other: "Polynomial | Rational") -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = as_fraction(other)
            return Polynomial(self.dim, {e: k * c for e, k in self._terms.items()})
        self._check_dim(other)
        acc: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.dim, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.dim, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- calculus and substitution -----------------------------------------

    def partial(self, axis: int) -> "Polynomial":
        """Exact partial derivative with respect to x_axis."""
        if not 0 <= axis < self.dim:
            raise ValueError(f"axis {axis} out of range for dimension {self.dim}")
        acc: dict[Exponents, Fraction] = {}
        for exp, coef in self._terms.items():
            e = exp[axis]
            if e:
                new = exp[:axis] + (e - 1,) + exp[axis + 1:]
                acc[new] = acc.get(new, Fraction(0)) + coef * e
        return Polynomial(self.dim, acc)

    def partials(self, axes: Iterable[int]) -> "Polynomial":
        out = self
        for axis in axes:
            out = out.partial(axis)
        return out

    def evaluate(self, point: Sequence[Rational]) -> Fraction:
        if len(point) != self.dim:
            raise ValueError("point has wrong dimension")
        pt = [as_fraction(v) for v in point]
        total = Fraction(0)
        for exp, coef in self._terms.items():
            term = coef
            for v, e in zip(pt, exp):
                if e:
                    term *= v ** e
            total += term
        return total

    def substitute(self, axis: int, replacement: "Polynomial") -> "Polynomial":
        """Substitute x_axis := replacement (a polynomial in the same d variables)."""
        self._check_dim(replacement)
        groups: dict[int, list[tuple[Exponents, Fraction]]] = {}
        for exp, coef in self._terms.items():
            rest = exp[:axis] + (0,) + exp[axis + 1:]
            groups.setdefault(exp[axis], []).append((rest, coef))
        out = Polynomial.zero(self.dim)
        power = Polynomial.constant(self.dim, 1)
        for e in range(max(groups, default=0) + 1):
            if e in groups:
                out = out + Polynomial(self.dim, groups[e]) * power
            power = power * replacement
        return out

    def permute(self, order: Sequence[int]) -> "Polynomial":
        """Return f(x_{order[0]}, ..., x_{order[d-1]})."""
        if sorted(order) != list(range(self.dim)):
            raise ValueError(f"{order} is not a permutation of 0..{self.dim - 1}")
        acc: dict[Exponents, Fraction] = {}
        for exp, coef in self._terms.items():
            new = [0] * self.dim
            for pos, e in enumerate(exp):
                new[order[pos]] = e
            acc[tuple(new)] = coef
        return Polynomial(self.dim, acc)

    def restrict(self, zeroed: Iterable[int]) -> "Polynomial":
        """Restrict to the face of T^d where the given coordinates vanish.

        Index self.dim stands for the hyperplane 1 - |x| = 0; imposing it
        eliminates the highest-index surviving variable.  The result lives in
        d - len(zeroed) variables, surviving coordinates in original order.
        """
        zset = frozenset(zeroed)
        if not zset <= set(range(self.dim + 1)) or len(zset) > self.dim:
            raise ValueError(f"bad face {sorted(zset)} for dimension {self.dim}")
        true_zeros = sorted(zset - {self.dim})
        survivors = [i for i in range(self.dim) if i not in true_zeros]
        rdim = self.dim - len(zset)
        if self.dim not in zset:
            pos = {i: p for p, i in enumerate(survivors)}
            acc: dict[Exponents, Fraction] = {}
            for exp, coef in self._terms.items():
                if any(exp[i] for i in true_zeros):
                    continue
                new = [0] * rdim
                for i in survivors:
                    new[pos[i]] = exp[i]
                key = tuple(new)
                acc[key] = acc.get(key, Fraction(0)) + coef
            return Polynomial(rdim, acc)
        designated = survivors[-1]
        keep = survivors[:-1]
        pos = {i: p for p, i in enumerate(keep)}
        out = Polynomial.zero(rdim)
        for exp, coef in self._terms.items():
            if any(exp[i] for i in true_zeros):
                continue
            new = [0] * rdim
            for i in keep:
                new[pos[i]] = exp[i]
            piece = Polynomial.monomial(rdim, new, coef)
            e = exp[designated]
            if e:
                piece = piece * complement_power(rdim, e)
            out = out + piece
        return out

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "d": self.dim,
            "terms": [{"exp": list(exp), "coef": format_rational(coef)}
                      for exp, coef in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Polynomial":
        dim = int(data["d"])
        terms = [(tuple(t["exp"]), parse_rational(t["coef"])) for t in data["terms"]]
        return cls(dim, terms)


@lru_cache(maxsize=None)
def complement_power(dim: int, power: int) -> Polynomial:
    """(1 - x_0 - ... - x_{dim-1}) ** power, multinomially expanded."""
    base = Polynomial.constant(dim, 1)
    for i in range(dim):
        base = base - Polynomial.variable(dim, i)
    return base ** power


def complement(dim: int) -> Polynomial:
    return complement_power(dim, 1)


def monomials_of_degree(dim: int, degree: int) -> list[Exponents]:
    """All exponent tuples of total degree `degree`, graded-lex sorted."""
    if degree < 0:
        return []
    if dim == 0:
        return [()] if degree == 0 else []
    out = []
    for head in range(degree + 1):
        for tail in monomials_of_degree(dim - 1, degree - head):
            out.append((head,) + tail)
    return sorted(out, key=graded_lex_key)


def monomials_up_to(dim: int, degree: int) -> list[Exponents]:
    out: list[Exponents] = []
    for n in range(degree + 1):
        out.extend(monomials_of_degree(dim, n))
    return out


def constrained_indices(dim: int, degree: int, zero_axes: Iterable[int]) -> list[Exponents]:
    """Degree-`degree` multi-indices whose entries vanish on zero_axes."""
    zset = set(zero_axes)
    free = [i for i in range(dim) if i not in zset]
    out = []
    for part in monomials_of_degree(len(free), degree):
        exp = [0] * dim
        for axis, e in zip(free, part):
            exp[axis] = e
        out.append(tuple(exp))
    return sorted(out, key=graded_lex_key)


@dataclass(frozen=True)
class FaceId:
    """A face of T^d: the coordinates in `zeroed` vanish; index d means 1-|x|=0."""

    ambient: int
    zeroed: frozenset[int]

    def __post_init__(self) -> None:
        if not self.zeroed <= set(range(self.ambient + 1)):
            raise ValueError("face indices out of range")
        if len(self.zeroed) > self.ambient:
            raise ValueError("too many zeroed coordinates")

    @property
    def dim(self) -> int:
        return self.ambient - len(self.zeroed)

    def restrict(self, f: Polynomial) -> Polynomial:
        if f.dim != self.ambient:
            raise ValueError("polynomial dimension does not match the face")
        return f.restrict(self.zeroed)


def box_indices(bounds: Sequence[int]) -> Iterator[Exponents]:
    """All multi-indices m with 0 <= m_i <= bounds_i."""
    return itertools.product(*(range(b + 1) for b in bounds))
