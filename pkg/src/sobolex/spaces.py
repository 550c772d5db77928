"""Face subspaces and the singular-parameter eigenspaces they assemble into.

An eigenspace for the weight whose trailing k exponents equal -1 decomposes
into a multiplied core block, one block per 0/1 arrangement on the trailing
k slots (distinct patterns, not permutation orbits), and a top face block.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Sequence

from .bases import (Basis, eigencheck, permuted_element, rodrigues_basis,
                    rodrigues_element)
from .linalg import poly_rank
from .moments import vertex_eval
from .polynomials import (Polynomial, complement, constrained_indices,
                          monomials_of_degree, monomials_up_to)
from .products import SingularProduct, gram, labeled
from .scalars import Rational, as_fraction
from .weighted import ParamVector


def h_space(gamma: ParamVector, zero_axes: Sequence[int], n: int) -> Basis:
    """Span of degree-n Rodrigues-type elements whose indices vanish on a face.

    `zero_axes` may include index d (the hyperplane); parameters on the zeroed
    slots never appear in the elements, so they are pinned to 0.  Empty when
    n < 0 or when d or more coordinates are zeroed.
    """
    d = gamma.d
    zset = frozenset(zero_axes)
    if not zset <= set(range(d + 1)):
        raise ValueError(f"bad zero set {sorted(zset)}")
    label = "h[" + ",".join(str(i) for i in sorted(zset)) + "]"
    pinned = gamma.with_values({i: 0 for i in zset})
    basis = Basis(d, pinned, label)
    if n < 0 or len(zset) >= d:
        return basis
    if d not in zset:
        for nu in constrained_indices(d, n, zset):
            basis.elements.append((nu, rodrigues_element(pinned, nu)))
        return basis
    true_zeros = sorted(zset - {d})
    free = [i for i in range(d) if i not in true_zeros]
    excluded = free[-1]
    order = tuple([d] + true_zeros + free[:-1])
    z = len(zset)
    for part in monomials_of_degree(d - z, n):
        nu = (0,) * z + part
        basis.elements.append((nu, permuted_element(pinned, order, nu)))
    return basis


def _pattern_params(tail: tuple[Fraction, ...], pattern: tuple[int, ...]) -> ParamVector:
    return ParamVector(tail + tuple(Fraction(p) for p in pattern))


def u_space(dim: int, tail: Sequence[Rational], k: int, n: int,
            vertex_lambdas: Sequence[Rational] | None = None) -> Basis:
    """The degree-n polynomial eigenspace for the weight (tail, -1, ..., -1).

    Blocks, in order: the core block (all trailing slots multiplied in, core
    indices shifted by +1), then each 0/1 arrangement with j ones for
    j = k-1 .. 1, then the top face block.  For k = d+1 and n = 1 the span is
    {x_j + c_j} with c_j = -lam_j / sum(lam), tied to the vertex coefficients
    of the companion inner product.
    """
    d = dim
    if not 1 <= k <= d + 1:
        raise ValueError("k must lie in 1..d+1")
    tail = tuple(as_fraction(t) for t in tail)
    if len(tail) != d + 1 - k:
        raise ValueError(f"tail must have length {d + 1 - k}")
    if any(t <= -1 for t in tail):
        raise ValueError("tail exponents must be > -1")
    full = ParamVector(tail + (Fraction(-1),) * k)
    basis = Basis(d, full, f"u[k={k}]")
    if n < 0:
        return basis
    if n == 0:
        basis.elements.append((("one",), Polynomial.constant(d, 1)))
        return basis
    if k == d + 1 and n == 1:
        lams = tuple(as_fraction(v) for v in (vertex_lambdas or (1,) * (d + 1)))
        if len(lams) != d + 1:
            raise ValueError("vertex_lambdas must have length d+1")
        total = sum(lams, Fraction(0))
        if total == 0:
            raise ValueError("vertex coefficients must not all vanish")
        for j in range(1, d + 1):
            shift = -lams[j] / total
            basis.elements.append((("linear", j),
                                   Polynomial.variable(d, j - 1) + shift))
        return basis

    slots = list(range(d + 1 - k, d + 1))

    def multiplier(active: Sequence[int]) -> Polynomial:
        out = Polynomial.constant(d, 1)
        for s in active:
            out = out * (complement(d) if s == d else Polynomial.variable(d, s))
        return out

    if n - k >= 0:
        mult = multiplier(slots)
        shifted = ParamVector(tail + (Fraction(1),) * k)
        for nu, p in rodrigues_basis(shifted, n - k).elements:
            basis.elements.append((("core", nu), mult * p))
    for j in range(k - 1, 0, -1):
        if n - j < 0:
            continue
        for ones in itertools.combinations(range(k), j):
            pattern = tuple(1 if t in ones else 0 for t in range(k))
            active = [slots[t] for t in ones]
            zero_slots = [slots[t] for t in range(k) if t not in ones]
            params = _pattern_params(tail, pattern)
            block = h_space(params, zero_slots, n - j)
            if not block.elements:
                continue
            mult = multiplier(active)
            for nu, p in block.elements:
                basis.elements.append((("block", pattern, nu), mult * p))
    top = h_space(_pattern_params(tail, (0,) * k), slots, n)
    for nu, p in top.elements:
        basis.elements.append((("top", nu), p))
    return basis


def expected_dimension(dim: int, n: int) -> int:
    return comb(n + dim - 1, n)


def verify_u_space(dim: int, tail: Sequence[Rational], k: int, n: int,
                   product: SingularProduct | None = None) -> dict:
    """Exact verification report for one singular eigenspace.

    Checks: every element solves the differential equation at the singular
    parameters with the stated eigenvalue; the stacked coefficient matrix has
    full rank binom(n+d-1, n); the Gram matrix against all lower-degree
    monomials under the companion product is identically zero; and, in the
    all-singular case with n >= 2, every element vanishes at every vertex.
    """
    if product is None:
        product = SingularProduct(dim, tuple(tail), k)
    basis = u_space(dim, tail, k, n,
                    vertex_lambdas=product.lam_vertex if k == dim + 1 else None)
    full = basis.params
    lam = -n * (n + full.total + dim)
    failures: list[dict] = []

    def fail(check: str, key=None, witness: Polynomial | None = None) -> None:
        entry: dict = {"check": check}
        if key is not None:
            entry["element"] = str(key)
        if witness is not None:
            entry["counterexample"] = witness.to_json()
        failures.append(entry)

    eigen_ok = True
    for key, p in basis.elements:
        if not eigencheck(full, p, n):
            eigen_ok = False
            fail("eigen", key, p)
    expected = expected_dimension(dim, n)
    rank_value = poly_rank(basis.polys())
    rank_ok = rank_value == expected == len(basis.elements)
    if not rank_ok:
        fail(f"rank {rank_value} of {len(basis.elements)} elements, expected {expected}")
    lower = [Polynomial.monomial(dim, e) for e in monomials_up_to(dim, n - 1)]
    report = gram(product, [(str(key), p) for key, p in basis.elements],
                  labeled(lower, "m"))
    ortho_ok = report.all_zero
    if not ortho_ok:
        for i, (key, p) in enumerate(basis.elements):
            if any(report.matrix[i]):
                fail("gram-vs-lower-degree", key, p)
    vertices_ok = True
    if k == dim + 1 and n >= 2:
        for key, p in basis.elements:
            if any(vertex_eval(p, j) for j in range(dim + 1)):
                vertices_ok = False
                fail("vertex-vanishing", key, p)
    ok = eigen_ok and rank_ok and ortho_ok and vertices_ok
    return {
        "d": dim, "k": k, "n": n,
        "gamma": full.to_json(),
        "eigenvalue": str(lam),
        "count": len(basis.elements),
        "rank": rank_value,
        "expected_dim": expected,
        "eigen_ok": eigen_ok,
        "rank_ok": rank_ok,
        "orthogonal_to_lower_degree": ortho_ok,
        "vertices_vanish": vertices_ok if (k == dim + 1 and n >= 2) else None,
        "failures": failures,
        "ok": ok,
    }
