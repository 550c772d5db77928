"""The closed class c * x^alpha * (1-|x|)^beta with rational exponents.

Differentiating a simplex weight keeps you inside this class, which is what
makes every Rodrigues-style construction executable exactly: shift the weight,
differentiate term by term, divide the weight back out.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NonPolynomialQuotient
from .polynomials import Polynomial, complement_power
from .scalars import Rational, as_fraction, format_rational, parse_rational

PowerKey = tuple[tuple[Fraction, ...], Fraction]


class ParamVector:
    """Weight exponents (g_1, ..., g_d, g_{d+1}) for x^g * (1-|x|)^{g_{d+1}}."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Rational | str]):
        vals = tuple(as_fraction(v) if not isinstance(v, str) else parse_rational(v)
                     for v in entries)
        if len(vals) < 2:
            raise ValueError("need at least two entries (d >= 1)")
        object.__setattr__(self, "entries", vals)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("ParamVector is immutable")

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    @property
    def last(self) -> Fraction:
        return self.entries[-1]

    @property
    def total(self) -> Fraction:
        return sum(self.entries, Fraction(0))

    @property
    def singular_axes(self) -> frozenset[int]:
        return frozenset(i for i, g in enumerate(self.entries) if g == -1)

    @property
    def is_integrable(self) -> bool:
        return all(g > -1 for g in self.entries)

    def shifted(self, deltas: Sequence[Rational]) -> "ParamVector":
        if len(deltas) != len(self.entries):
            raise ValueError("shift has wrong length")
        return ParamVector([g + as_fraction(t) for g, t in zip(self.entries, deltas)])

    def with_values(self, assignments: Mapping[int, Rational]) -> "ParamVector":
        vals = list(self.entries)
        for i, v in assignments.items():
            vals[i] = as_fraction(v)
        return ParamVector(vals)

    @classmethod
    def parse(cls, text: str) -> "ParamVector":
        return cls([parse_rational(p) for p in text.split(",")])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ParamVector) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return "ParamVector(" + ",".join(format_rational(g) for g in self.entries) + ")"

    def to_json(self) -> list[str]:
        return [format_rational(g) for g in self.entries]


def face_params(gamma: ParamVector, zeroed: Iterable[int]) -> ParamVector:
    """Exponents of the weight restricted to the face where `zeroed` vanish.

    Follows the same convention as Polynomial.restrict: if the hyperplane
    index d is zeroed, the highest surviving coordinate is eliminated and its
    exponent becomes the new (1-|x|) exponent.
    """
    d = gamma.d
    zset = frozenset(zeroed)
    if not zset <= set(range(d + 1)) or not 0 < len(zset) <= d - 1:
        raise ValueError(f"bad face {sorted(zset)} for dimension {d}")
    if d not in zset:
        vals = [gamma.entries[i] for i in range(d) if i not in zset]
        vals.append(gamma.entries[d])
        return ParamVector(vals)
    survivors = [i for i in range(d) if i not in zset]
    designated = survivors[-1]
    vals = [gamma.entries[i] for i in survivors[:-1]]
    vals.append(gamma.entries[designated])
    return ParamVector(vals)


class WeightedForm:
    """Finite sum of terms c * x^alpha * (1-|x|)^beta, rational exponents."""

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[PowerKey, Rational] | Iterable[tuple[PowerKey, Rational]] = ()):
        self.dim = dim
        acc: dict[PowerKey, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (alpha, beta), coef in items:
            alpha = tuple(as_fraction(a) for a in alpha)
            if len(alpha) != dim:
                raise ValueError("alpha has wrong length")
            key = (alpha, as_fraction(beta))
            c = acc.get(key, Fraction(0)) + as_fraction(coef)
            if c:
                acc[key] = c
            else:
                acc.pop(key, None)
        self._terms = acc

    @classmethod
    def single(cls, dim: int, coef: Rational, alpha: Sequence[Rational], beta: Rational) -> "WeightedForm":
        return cls(dim, {(tuple(as_fraction(a) for a in alpha), as_fraction(beta)): coef})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self):
        return iter(self._terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedForm):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __add__(self, other: "WeightedForm") -> "WeightedForm":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return WeightedForm(self.dim, list(self._terms.items()) + list(other._terms.items()))

    def scale(self, c: Rational) -> "WeightedForm":
        c = as_fraction(c)
        return WeightedForm(self.dim, {k: v * c for k, v in self._terms.items()})

    def __neg__(self) -> "WeightedForm":
        return self.scale(-1)

    def derivative(self, axis: int) -> "WeightedForm":
        """d/dx_axis, term by term:
        (x^a (1-|x|)^b)' = a_i x^{a-e_i} (1-|x|)^b - b x^a (1-|x|)^{b-1}."""
        if not 0 <= axis < self.dim:
            raise ValueError(f"axis {axis} out of range")
        acc: list[tuple[PowerKey, Fraction]] = []
        for (alpha, beta), coef in self._terms.items():
            ai = alpha[axis]
            if ai:
                lowered = alpha[:axis] + (ai - 1,) + alpha[axis + 1:]
                acc.append(((lowered, beta), coef * ai))
            if beta:
                acc.append(((alpha, beta - 1), -coef * beta))
        return WeightedForm(self.dim, acc)

    def directional(self, operator: Sequence[tuple[int, int]]) -> "WeightedForm":
        """Apply a signed combination of partials, e.g. [(i,1),(j,-1)] for d_i - d_j."""
        out = WeightedForm(self.dim)
        for axis, sign in operator:
            out = out + self.derivative(axis).scale(sign)
        return out

    def divide_by_weight(self, gamma: ParamVector) -> Polynomial:
        """Divide by x^g (1-|x|)^{g_{d+1}} and expand into a sparse polynomial.

        Every residual exponent must be a nonnegative integer; otherwise the
        quotient leaves the polynomial ring and NonPolynomialQuotient is raised.
        """
        if gamma.d != self.dim:
            raise ValueError("parameter vector has wrong dimension")
        out = Polynomial.zero(self.dim)
        for (alpha, beta), coef in self._terms.items():
            exps = []
            for a, g in zip(alpha, gamma.entries[:-1]):
                r = a - g
                if r.denominator != 1 or r < 0:
                    raise NonPolynomialQuotient(
                        f"residual exponent {r} is not a nonnegative integer")
                exps.append(int(r))
            rb = beta - gamma.last
            if rb.denominator != 1 or rb < 0:
                raise NonPolynomialQuotient(
                    f"residual exponent {rb} is not a nonnegative integer")
            piece = Polynomial.monomial(self.dim, exps, coef)
            if rb:
                piece = piece * complement_power(self.dim, int(rb))
            out = out + piece
        return out
