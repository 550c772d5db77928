import random
from fractions import Fraction

from sobolex.linalg import (determinant, in_span, leading_principal_minors,
                            poly_rank, rank, solve_combination, spans_equal)
from sobolex.polynomials import Polynomial


def naive_rank(rows):
    """Plain Fraction row reduction, independent of the Bareiss path."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [v / m[r][col] for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def test_rank_matches_naive_reduction():
    rng = random.Random(314)
    for _ in range(120):
        nr, nc = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                 for _ in range(nc)] for _ in range(nr)]
        # plant dependencies now and then
        if nr >= 2 and rng.random() < 0.4:
            c = Fraction(rng.randint(-2, 2))
            rows[-1] = [c * v for v in rows[0]]
        assert rank(rows) == naive_rank(rows)


def test_determinant_basics():
    assert determinant([[Fraction(2)]]) == 2
    m = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    assert determinant(m) == -2
    singular = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert determinant(singular) == 0
    rng = random.Random(315)
    for _ in range(30):
        n = rng.randint(1, 4)
        m = [[Fraction(rng.randint(-3, 3), rng.randint(1, 2))
              for _ in range(n)] for _ in range(n)]
        t = [[m[i][j] for i in range(n)] for j in range(n)]
        assert determinant(m) == determinant(t)


def test_leading_principal_minors():
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(2)]]
    assert leading_principal_minors(m) == [Fraction(2), Fraction(3)]


def test_solve_combination():
    v1 = [Fraction(1), Fraction(0), Fraction(2)]
    v2 = [Fraction(0), Fraction(1), Fraction(1)]
    target = [Fraction(2), Fraction(3), Fraction(7)]
    coeffs = solve_combination(target, [v1, v2])
    assert coeffs == [Fraction(2), Fraction(3)]
    assert solve_combination([Fraction(0), Fraction(0), Fraction(1)], [v1]) is None


def test_poly_span_helpers():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    assert poly_rank([x, y, x + y]) == 2
    assert spans_equal([x, y], [x + y, x - y])
    assert not spans_equal([x], [x, y])
    coeffs = in_span(2 * x + 3 * y, [x, y])
    assert coeffs == [Fraction(2), Fraction(3)]
    assert in_span(x * x, [x, y]) is None
