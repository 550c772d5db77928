"""Every bilinear form in the package, plus Gram machinery.

Each integral term is Dirichlet-normalized against its own displayed base
weight (the monomial factors such as x_i inside a summand belong to the
integrand, not the weight).  The lambda coefficients are free positive
constants, so this rescaling never affects an orthogonality statement while
keeping every value rational; the describe() payload records the convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DependentInput
from .linalg import leading_principal_minors
from .moments import face_inner_product, inner_product, integral, vertex_eval
from .polynomials import FaceId, Polynomial
from .scalars import Rational, as_fraction, format_rational
from .weighted import ParamVector


def mass_ratio(params: ParamVector) -> str:
    """The reciprocal mass of a base weight as a symbolic Gamma-ratio string.

    Normalized values equal this constant times the plain integral; recording
    it keeps the rescaling of each term auditable even when it is irrational.
    """
    num = format_rational(params.total + params.d + 1)
    den = "*".join(f"Gamma({format_rational(g + 1)})" for g in params.entries)
    return f"Gamma({num})/({den})"


class ClassicalProduct:
    """The plain normalized pairing against an integrable simplex weight."""

    kind = "classical"

    def __init__(self, gamma: ParamVector):
        self.gamma = gamma
        self.dim = gamma.d

    @property
    def is_valid(self) -> bool:
        return self.gamma.is_integrable

    def value(self, f: Polynomial, g: Polynomial) -> Fraction:
        return inner_product(f, g, self.gamma)

    def describe(self) -> dict:
        return {"kind": self.kind, "gamma": self.gamma.to_json(),
                "normalization": {"main": mass_ratio(self.gamma)}}


class DerivativeProduct:
    """Classical pairing plus weighted pairings of order-j mixed derivatives.

    For every subset S of coordinates with 1 <= |S| <= order, adds
    lambda_S <d^S f, d^S g> against the weight shifted by +1 on S and +j on
    the complement factor.
    """

    kind = "derivative"

    def __init__(self, gamma: ParamVector, order: int,
                 lambdas: Mapping[frozenset[int], Rational] | None = None):
        d = gamma.d
        if not 1 <= order <= d:
            raise ValueError("order must lie in 1..d")
        self.gamma = gamma
        self.dim = d
        self.order = order
        self.lambdas = {frozenset(k): as_fraction(v)
                        for k, v in (lambdas or {}).items()}

    def _lam(self, subset: frozenset[int]) -> Fraction:
        return self.lambdas.get(subset, Fraction(1))

    @property
    def is_valid(self) -> bool:
        return self.gamma.is_integrable and all(v >= 0 for v in self.lambdas.values())

    def value(self, f: Polynomial, g: Polynomial) -> Fraction:
        total = inner_product(f, g, self.gamma)
        for j in range(1, self.order + 1):
            for subset in itertools.combinations(range(self.dim), j):
                lam = self._lam(frozenset(subset))
                if not lam:
                    continue
                deltas = [1 if i in subset else 0 for i in range(self.dim)] + [j]
                shifted = self.gamma.shifted(deltas)
                total += lam * inner_product(f.partials(subset), g.partials(subset), shifted)
        return total

    def describe(self) -> dict:
        norms = {"main": mass_ratio(self.gamma)}
        for j in range(1, self.order + 1):
            for subset in itertools.combinations(range(self.dim), j):
                deltas = [1 if i in subset else 0 for i in range(self.dim)] + [j]
                tag = "d" + "".join(str(i) for i in subset)
                norms[tag] = mass_ratio(self.gamma.shifted(deltas))
        return {"kind": self.kind, "gamma": self.gamma.to_json(), "order": self.order,
                "lambda": {"+".join(str(i) for i in sorted(k)): format_rational(v)
                           for k, v in sorted(self.lambdas.items(), key=lambda kv: sorted(kv[0]))},
                "normalization": norms}


class SingularProduct:
    """The Sobolev pairing attached to a weight whose trailing k exponents are -1.

    Parameters: dim d, the leading exponents `tail` (length d+1-k, all > -1),
    and the coefficient families
      lam       -- the boundary/vertex coefficient of the final term (k <= d),
      lam_axis  -- per-coordinate coefficients of the gradient face term,
      lam_face  -- per-subset coefficients of the intermediate face terms,
      lam_vertex -- vertex coefficients lam_{j,0}, j = 0..d (k = d+1 only).
    All default to 1.
    """

    kind = "singular"

    def __init__(self, dim: int, tail: Sequence[Rational], k: int,
                 lam: Rational = 1,
                 lam_axis: Sequence[Rational] | None = None,
                 lam_face: Mapping[frozenset[int], Rational] | None = None,
                 lam_vertex: Sequence[Rational] | None = None):
        if not 1 <= k <= dim + 1:
            raise ValueError("k must lie in 1..d+1")
        tail = tuple(as_fraction(t) for t in tail)
        if len(tail) != dim + 1 - k:
            raise ValueError(f"tail must have length {dim + 1 - k}")
        if any(t <= -1 for t in tail):
            raise ValueError("tail exponents must be > -1")
        self.dim = dim
        self.k = k
        self.tail = tail
        self.lam = as_fraction(lam)
        self.lam_axis = tuple(as_fraction(v) for v in (lam_axis or (1,) * (dim - k + 1)))
        if len(self.lam_axis) != dim - k + 1:
            raise ValueError("lam_axis has wrong length")
        self.lam_face = {frozenset(kk): as_fraction(v) for kk, v in (lam_face or {}).items()}
        self.lam_vertex = tuple(as_fraction(v) for v in (lam_vertex or (1,) * (dim + 1)))
        if len(self.lam_vertex) != dim + 1:
            raise ValueError("lam_vertex has wrong length")

    def _face_lam(self, subset: frozenset[int]) -> Fraction:
        return self.lam_face.get(subset, Fraction(1))

    @property
    def full_params(self) -> ParamVector:
        return ParamVector(self.tail + (Fraction(-1),) * self.k)

    @property
    def is_valid(self) -> bool:
        face_ok = all(v > 0 for v in self.lam_face.values()) if self.lam_face else True
        if self.k == self.dim + 1:
            return face_ok and any(v > 0 for v in self.lam_vertex) and \
                all(v >= 0 for v in self.lam_vertex)
        return self.lam > 0 and all(v > 0 for v in self.lam_axis) and face_ok

    @property
    def _mk(self) -> list[int]:
        # the trailing k-1 true-coordinate axes, zero-based
        return list(range(self.dim - self.k + 1, self.dim))

    def value(self, f: Polynomial, g: Polynomial) -> Fraction:
        if f.dim != self.dim or g.dim != self.dim:
            raise ValueError("dimension mismatch")
        if self.k == 1:
            return self._value_k1(f, g)
        if self.k == self.dim + 1:
            return self._value_full(f, g)
        return self._value_mid(f, g)

    def _value_k1(self, f: Polynomial, g: Polynomial) -> Fraction:
        d = self.dim
        grad = Polynomial.zero(d)
        for i in range(d):
            grad = grad + Polynomial.variable(d, i) * f.partial(i) * g.partial(i)
        total = integral(grad, ParamVector(self.tail + (Fraction(0),)))
        if self.lam:
            if d == 1:
                total += self.lam * vertex_eval(f, 1) * vertex_eval(g, 1)
            else:
                face = FaceId(d, frozenset({d}))
                total += self.lam * face_inner_product(f, g, face, ParamVector(self.tail))
        return total

    def _value_mid(self, f: Polynomial, g: Polynomial) -> Fraction:
        d, k = self.dim, self.k
        mk = self._mk
        total = inner_product(
            f.partials(mk), g.partials(mk),
            ParamVector(self.tail + (Fraction(0),) * (k - 1) + (Fraction(k - 2),)))
        for i in range(1, k - 1):
            for subset in itertools.combinations(mk, i):
                lam = self._face_lam(frozenset(subset))
                if not lam:
                    continue
                face = FaceId(d, frozenset(mk) - frozenset(subset))
                fp = ParamVector(self.tail + (Fraction(0),) * i + (Fraction(i - 1),))
                total += lam * face_inner_product(f.partials(subset), g.partials(subset), face, fp)
        face3 = FaceId(d, frozenset(mk))
        fd = face3.dim
        grad = Polynomial.zero(fd)
        for i in range(d - k + 1):
            lam = self.lam_axis[i]
            if not lam:
                continue
            grad = grad + lam * Polynomial.variable(fd, i) \
                * face3.restrict(f.partial(i)) * face3.restrict(g.partial(i))
        total += integral(grad, ParamVector(self.tail + (Fraction(0),)))
        if self.lam:
            if k == d:
                total += self.lam * vertex_eval(f, 1) * vertex_eval(g, 1)
            else:
                face4 = FaceId(d, frozenset(mk) | {d})
                total += self.lam * face_inner_product(f, g, face4, ParamVector(self.tail))
        return total

    def _value_full(self, f: Polynomial, g: Polynomial) -> Fraction:
        d = self.dim
        axes = list(range(d))
        total = inner_product(
            f.partials(axes), g.partials(axes),
            ParamVector((Fraction(0),) * d + (Fraction(d - 1),)))
        for i in range(1, d):
            for subset in itertools.combinations(axes, i):
                lam = self._face_lam(frozenset(subset))
                if not lam:
                    continue
                face = FaceId(d, frozenset(axes) - frozenset(subset))
                fp = ParamVector((Fraction(0),) * i + (Fraction(i - 1),))
                total += lam * face_inner_product(f.partials(subset), g.partials(subset), face, fp)
        for j in range(d + 1):
            lam = self.lam_vertex[j]
            if lam:
                total += lam * vertex_eval(f, j) * vertex_eval(g, j)
        return total

    def _normalizations(self) -> dict[str, str]:
        d, k = self.dim, self.k
        if k == 1:
            norms = {"main": mass_ratio(ParamVector(self.tail + (Fraction(0),)))}
            norms["boundary"] = ("vertex" if d == 1
                                 else mass_ratio(ParamVector(self.tail)))
            return norms
        if k == d + 1:
            norms = {"main": mass_ratio(ParamVector((Fraction(0),) * d
                                                    + (Fraction(d - 1),)))}
            for i in range(1, d):
                for subset in itertools.combinations(range(d), i):
                    tag = "face" + "".join(str(j) for j in subset)
                    norms[tag] = mass_ratio(
                        ParamVector((Fraction(0),) * i + (Fraction(i - 1),)))
            return norms
        norms = {"main": mass_ratio(ParamVector(
            self.tail + (Fraction(0),) * (k - 1) + (Fraction(k - 2),)))}
        for i in range(1, k - 1):
            for subset in itertools.combinations(self._mk, i):
                tag = "face" + "".join(str(j) for j in subset)
                norms[tag] = mass_ratio(ParamVector(
                    self.tail + (Fraction(0),) * i + (Fraction(i - 1),)))
        norms["gradient-face"] = mass_ratio(ParamVector(self.tail + (Fraction(0),)))
        norms["final"] = ("vertex" if k == d
                          else mass_ratio(ParamVector(self.tail)))
        return norms

    def describe(self) -> dict:
        out = {"kind": self.kind, "d": self.dim, "k": self.k,
               "tail": [format_rational(t) for t in self.tail],
               "normalization": self._normalizations()}
        if self.k == self.dim + 1:
            out["lambda_vertex"] = [format_rational(v) for v in self.lam_vertex]
        else:
            out["lambda"] = format_rational(self.lam)
            out["lambda_axis"] = [format_rational(v) for v in self.lam_axis]
        if self.lam_face:
            out["lambda_face"] = {
                "+".join(str(i) for i in sorted(kk)): format_rational(v)
                for kk, v in sorted(self.lam_face.items(), key=lambda kv: sorted(kv[0]))}
        return out


# -- named forms on the triangle ---------------------------------------------

class TriangleGammaSingular:
    """d = 2 form for exponents (alpha, beta, -1): gradient term plus the
    hypotenuse integral."""

    kind = "triangle[a,b,-1]"

    def __init__(self, alpha: Rational, beta: Rational, lam1: Rational = 1):
        self.alpha, self.beta = as_fraction(alpha), as_fraction(beta)
        self.lam1 = as_fraction(lam1)
        self.dim = 2

    @property
    def is_valid(self) -> bool:
        return self.lam1 > 0 and self.alpha > -1 and self.beta > -1

    def value(self, f: Polynomial, g: Polynomial) -> Fraction:
        x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        grad = x * f.partial(0) * g.partial(0) + y * f.partial(1) * g.partial(1)
        total = integral(grad, ParamVector([self.alpha, self.beta, 0]))
        face = FaceId(2, frozenset({2}))
        total += self.lam1 * face_inner_product(f, g, face, ParamVector([self.alpha, self.beta]))
        return total

    def describe(self) -> dict:
        return {"kind": self.kind, "alpha": format_rational(self.alpha),
                "beta": format_rational(self.beta), "lambda1": format_rational(self.lam1)}


class TriangleBetaGammaSingular:
    """d = 2 form for exponents (alpha, -1, -1)."""

    kind = "triangle[a,-1,-1]"

    def __init__(self, alpha: Rational, lam1: Rational = 1, lam10: Rational = 1):
        self.alpha = as_fraction(alpha)
        self.lam1, self.lam10 = as_fraction(lam1), as_fraction(lam10)
        self.dim = 2

    @property
    def is_valid(self) -> bool:
        return self.lam1 > 0 and self.lam10 > 0 and self.alpha > -1

    def value(self, f: Polynomial, g: Polynomial) -> Fraction:
        total = inner_product(f.partial(1), g.partial(1), ParamVector([self.alpha, 0, 0]))
        face = FaceId(2, frozenset({1}))
        x1 = Polynomial.variable(1, 0)
        edge = x1 * face.restrict(f.partial(0)) * face.restrict(g.partial(0))
        total += self.lam1 * integral(edge, ParamVector([self.alpha, 0]))
        total += self.lam10 * vertex_eval(f, 1) * vertex_eval(g, 1)
        return total

    def describe(self) -> dict:
        return {"kind": self.kind, "alpha": format_rational(self.alpha),
                "lambda1": format_rational(self.lam1), "lambda10": format_rational(self.lam10)}


class TriangleAllSingular:
    """d = 2 form for exponents (-1, -1, -1): mixed second derivative, two
    edge integrals, three vertex terms."""

    kind = "triangle[-1,-1,-1]"

    def __init__(self, lam1: Rational = 1, lam2: Rational = 1,
                 lam10: Rational = 1, lam01: Rational = 1, lam00: Rational = 1):
        self.lam1, self.lam2 = as_fraction(lam1), as_fraction(lam2)
        self.lam10, self.lam01, self.lam00 = (as_fraction(lam10), as_fraction(lam01),
                                              as_fraction(lam00))
        self.dim = 2

    @property
    def is_valid(self) -> bool:
        return (self.lam1 > 0 and self.lam2 > 0
                and any(v > 0 for v in (self.lam10, self.lam01, self.lam00))
                and all(v >= 0 for v in (self.lam10, self.lam01, self.lam00)))

    def value(self, f: Polynomial, g: Polynomial) -> Fraction:
        total = inner_product(f.partials([0, 1]), g.partials([0, 1]), ParamVector([0, 0, 1]))
        edge_y0 = FaceId(2, frozenset({1}))
        total += self.lam1 * face_inner_product(f.partial(0), g.partial(0),
                                                edge_y0, ParamVector([0, 0]))
        edge_x0 = FaceId(2, frozenset({0}))
        total += self.lam2 * face_inner_product(f.partial(1), g.partial(1),
                                                edge_x0, ParamVector([0, 0]))
        total += self.lam10 * vertex_eval(f, 1) * vertex_eval(g, 1)
        total += self.lam01 * vertex_eval(f, 2) * vertex_eval(g, 2)
        total += self.lam00 * vertex_eval(f, 0) * vertex_eval(g, 0)
        return total

    def describe(self) -> dict:
        return {"kind": self.kind,
                "lambda": [format_rational(v) for v in
                           (self.lam1, self.lam2, self.lam10, self.lam01, self.lam00)]}


class TriangleFirstTwoSingular:
    """d = 2 form for exponents (-1, -1, gamma): the symmetric variant with a
    directional derivative and two edge integrals."""

    kind = "triangle[-1,-1,g]"

    def __init__(self, gamma: Rational, lam1: Rational = 1, lam2: Rational = 1,
                 lam00: Rational = 1):
        self.gamma_exp = as_fraction(gamma)
        self.lam1, self.lam2, self.lam00 = (as_fraction(lam1), as_fraction(lam2),
                                            as_fraction(lam00))
        self.dim = 2

    @property
    def is_valid(self) -> bool:
        return (self.gamma_exp > -1 and self.lam00 > 0
                and (self.lam1 > 0 or self.lam2 > 0)
                and self.lam1 >= 0 and self.lam2 >= 0)

    def value(self, f: Polynomial, g: Polynomial) -> Fraction:
        df = f.partial(1) - f.partial(0)
        dg = g.partial(1) - g.partial(0)
        total = inner_product(df, dg, ParamVector([0, 0, self.gamma_exp]))
        edge_y0 = FaceId(2, frozenset({1}))
        total += self.lam1 * face_inner_product(f.partial(0), g.partial(0),
                                                edge_y0, ParamVector([0, self.gamma_exp + 1]))
        edge_x0 = FaceId(2, frozenset({0}))
        total += self.lam2 * face_inner_product(f.partial(1), g.partial(1),
                                                edge_x0, ParamVector([0, self.gamma_exp + 1]))
        total += self.lam00 * vertex_eval(f, 0) * vertex_eval(g, 0)
        return total

    def describe(self) -> dict:
        return {"kind": self.kind, "gamma": format_rational(self.gamma_exp),
                "lambda": [format_rational(v) for v in (self.lam1, self.lam2, self.lam00)]}


# -- one-variable Sobolev forms ----------------------------------------------

def _to_unit_interval(h: Polynomial) -> Polynomial:
    """Compose a polynomial on [-1,1] with x = 2u-1."""
    sub = Polynomial(1, {(0,): Fraction(-1), (1,): Fraction(2)})
    return h.substitute(0, sub)


class JacobiSingularBeta:
    """[-1,1] form λ f(1)g(1) + normalized ∫ (1+x)^{β+1} f'g' dx."""

    kind = "jacobi[-1,b]"

    def __init__(self, beta: Rational, lam: Rational = 1):
        self.beta = as_fraction(beta)
        self.lam = as_fraction(lam)
        self.dim = 1

    @property
    def is_valid(self) -> bool:
        return self.lam > 0 and self.beta > -1

    def value(self, f: Polynomial, g: Polynomial) -> Fraction:
        total = self.lam * f.evaluate([1]) * g.evaluate([1])
        prod = _to_unit_interval(f.partial(0) * g.partial(0))
        total += integral(prod, ParamVector([self.beta + 1, 0]))
        return total

    def describe(self) -> dict:
        return {"kind": self.kind, "beta": format_rational(self.beta),
                "lambda": format_rational(self.lam)}


class JacobiSingularBoth:
    """[-1,1] form λ1 f(1)g(1) + λ2 f(-1)g(-1) + normalized ∫ f'g' dx."""

    kind = "jacobi[-1,-1]"

    def __init__(self, lam1: Rational = 1, lam2: Rational = 1):
        self.lam1, self.lam2 = as_fraction(lam1), as_fraction(lam2)
        self.dim = 1

    @property
    def is_valid(self) -> bool:
        return (self.lam1 >= 0 and self.lam2 >= 0
                and (self.lam1 > 0 or self.lam2 > 0))

    def value(self, f: Polynomial, g: Polynomial) -> Fraction:
        total = self.lam1 * f.evaluate([1]) * g.evaluate([1])
        total += self.lam2 * f.evaluate([-1]) * g.evaluate([-1])
        prod = _to_unit_interval(f.partial(0) * g.partial(0))
        total += integral(prod, ParamVector([0, 0]))
        return total

    def describe(self) -> dict:
        return {"kind": self.kind,
                "lambda": [format_rational(self.lam1), format_rational(self.lam2)]}


# -- Gram machinery -----------------------------------------------------------

@dataclass
class GramReport:
    spec: dict
    row_labels: list[str]
    col_labels: list[str]
    matrix: list[list[Fraction]]

    @property
    def all_zero(self) -> bool:
        return all(not v for row in self.matrix for v in row)

    @property
    def is_square(self) -> bool:
        return bool(self.matrix) and len(self.matrix) == len(self.matrix[0])

    @property
    def diagonal(self) -> bool:
        return self.is_square and all(not v for i, row in enumerate(self.matrix)
                                      for j, v in enumerate(row) if i != j)

    @property
    def symmetric(self) -> bool:
        return self.is_square and all(self.matrix[i][j] == self.matrix[j][i]
                                      for i in range(len(self.matrix))
                                      for j in range(len(self.matrix)))

    def minors(self) -> list[Fraction]:
        if not self.is_square:
            raise ValueError("minors need a square matrix")
        return leading_principal_minors(self.matrix)

    @property
    def positive_definite(self) -> bool | None:
        if not self.is_square or not self.symmetric:
            return None
        return all(m > 0 for m in self.minors())

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "rows": self.row_labels,
            "cols": self.col_labels,
            "matrix": [[format_rational(v) for v in row] for row in self.matrix],
            "all_zero": self.all_zero,
            "orthogonal_to_lower_degree": self.all_zero,
            "diagonal": self.diagonal if self.is_square else None,
            "positive_definite": self.positive_definite,
        }


def gram(product, rows: Sequence[tuple[str, Polynomial]],
         cols: Sequence[tuple[str, Polynomial]] | None = None) -> GramReport:
    """Exact Gram matrix of labeled polynomials under any product object."""
    rows = list(rows)
    cols = rows if cols is None else list(cols)
    same = cols is rows
    matrix: list[list[Fraction]] = []
    for i, (_, f) in enumerate(rows):
        line = []
        for j, (_, g) in enumerate(cols):
            if same and j < i:
                line.append(matrix[j][i])
            else:
                line.append(product.value(f, g))
        matrix.append(line)
    return GramReport(product.describe(), [lab for lab, _ in rows],
                      [lab for lab, _ in cols], matrix)


def labeled(polys: Sequence[Polynomial], prefix: str = "p") -> list[tuple[str, Polynomial]]:
    return [(f"{prefix}{i}", p) for i, p in enumerate(polys)]


def orthogonalize(product, polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Gram-Schmidt without normalization, entirely in rational arithmetic."""
    out: list[Polynomial] = []
    norms: list[Fraction] = []
    for p in polys:
        v = p
        for q, nq in zip(out, norms):
            v = v - (product.value(p, q) / nq) * q
        if v.is_zero:
            raise DependentInput("input polynomials are linearly dependent")
        nv = product.value(v, v)
        if nv == 0:
            raise DependentInput("bilinear form is degenerate on the input span")
        out.append(v)
        norms.append(nv)
    return out
