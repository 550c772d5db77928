"""Exact linear algebra over the rationals: rank, span tests, minors.

Rank and determinants run fraction-free (Bareiss) on integer matrices after
clearing denominators row by row; membership solves use plain Fraction
elimination.  No tolerance parameter exists anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .polynomials import Exponents, Polynomial, graded_lex_key

Matrix = list[list[Fraction]]


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        denom = 1
        for v in row:
            denom = denom * v.denominator // gcd(denom, v.denominator)
        out.append([int(v * denom) for v in row])
    return out


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank via fraction-free Gaussian elimination."""
    m = [r[:] for r in _integer_rows(rows)]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) // prev
            m[i][col] = 0
        prev = m[r][col]
        r += 1
        if r == nrows:
            break
    return r


def determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant (Bareiss with row pivoting)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in matrix:
        denom = 1
        for v in row:
            denom = denom * v.denominator // gcd(denom, v.denominator)
        scale *= denom
        rows.append([int(v * denom) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not rows[k][k]:
            pivot = next((i for i in range(k + 1, n) if rows[i][k]), None)
            if pivot is None:
                return Fraction(0)
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return Fraction(sign * rows[n - 1][n - 1], 1) / scale


def leading_principal_minors(matrix: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    n = len(matrix)
    return [determinant([row[:k] for row in matrix[:k]]) for k in range(1, n + 1)]


def solve_combination(target: Sequence[Fraction],
                      vectors: Sequence[Sequence[Fraction]]) -> list[Fraction] | None:
    """Coefficients c with sum c_i * vectors[i] == target, or None.

    Free coefficients are set to zero, so the answer is deterministic.
    """
    ncols = len(vectors)
    nrows = len(target)
    if any(len(v) != nrows for v in vectors):
        raise ValueError("vector lengths disagree")
    aug = [[vectors[j][i] for j in range(ncols)] + [target[i]] for i in range(nrows)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][col]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
        pivots.append((r, col))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols]:
            return None
    coeffs = [Fraction(0)] * ncols
    for row, col in pivots:
        coeffs[col] = aug[row][ncols]
    return coeffs


def coefficient_matrix(polys: Sequence[Polynomial],
                       support: Sequence[Exponents] | None = None) -> tuple[Matrix, list[Exponents]]:
    """Stack coefficient vectors over a common graded-lex support."""
    if support is None:
        seen: set[Exponents] = set()
        for p in polys:
            seen.update(exp for exp, _ in p.items())
        support = sorted(seen, key=graded_lex_key)
    support = list(support)
    rows = [[p.coefficient(exp) for exp in support] for p in polys]
    return rows, support


def poly_rank(polys: Sequence[Polynomial]) -> int:
    if not polys:
        return 0
    rows, _ = coefficient_matrix(polys)
    return rank(rows) if rows and rows[0] else 0


def spans_equal(left: Sequence[Polynomial], right: Sequence[Polynomial]) -> bool:
    """Exact span equality via mutual rank checks."""
    rows, support = coefficient_matrix(list(left) + list(right))
    nl = len(left)
    rl = rank(rows[:nl]) if nl else 0
    rr = rank(rows[nl:]) if len(right) else 0
    return rl == rr == rank(rows)


def in_span(target: Polynomial, basis: Sequence[Polynomial]) -> list[Fraction] | None:
    """Exact membership: coefficients expressing target in the basis, or None."""
    rows, support = coefficient_matrix(list(basis) + [target])
    vecs = rows[:-1]
    return solve_combination(rows[-1], vecs)
