import random
from fractions import Fraction

import pytest

from sobolex.bases import monomial_element, rodrigues_basis
from sobolex.errors import DependentInput
from sobolex.moments import inner_product
from sobolex.polynomials import Polynomial, complement, monomials_up_to
from sobolex.products import (ClassicalProduct, DerivativeProduct,
                              JacobiSingularBeta, JacobiSingularBoth,
                              SingularProduct, gram, labeled, orthogonalize)
from sobolex.spaces import h_space, u_space
from sobolex.weighted import ParamVector

H = Fraction(1, 2)
X = Polynomial.variable(2, 0)
Y = Polynomial.variable(2, 1)
ONE = Polynomial.constant(2, 1)


def monoms(d, n):
    return [Polynomial.monomial(d, e) for e in monomials_up_to(d, n)]


def test_gradient_face_product_example():
    spec = SingularProduct(2, (Fraction(0), Fraction(0)), 1)
    assert spec.value(X, Y) == Fraction(1, 6)
    assert spec.full_params == ParamVector([0, 0, -1])


def test_vertex_product_example():
    spec = SingularProduct(2, (), 3,
                           lam_vertex=(Fraction(5), Fraction(7), Fraction(11)))
    assert spec.value(ONE, ONE) == 5 + 7 + 11


def test_positive_definiteness_flags():
    spec = SingularProduct(2, (), 3)
    rep = gram(spec, labeled(monoms(2, 3), "m"))
    assert rep.positive_definite
    degenerate = SingularProduct(2, (), 3, lam_vertex=(0, 0, 0))
    rep = gram(degenerate, labeled(monoms(2, 2), "m"))
    assert rep.positive_definite is False
    assert not degenerate.is_valid
    assert spec.is_valid


def test_vanishing_only_at_zero():
    # <f,f> = 0 forces f = 0 when the coefficients are positive
    spec = SingularProduct(2, (), 3)
    rng = random.Random(5)
    for _ in range(20):
        f = Polynomial(2, {(rng.randint(0, 2), rng.randint(0, 2)):
                           rng.randint(-3, 3) for _ in range(3)})
        if not f.is_zero:
            assert spec.value(f, f) > 0


def test_singular_product_symmetry_bilinearity():
    rng = random.Random(6)
    for k, tail in ((1, (H, Fraction(1))), (2, (H,)), (3, ())):
        spec = SingularProduct(2, tail, k)
        for _ in range(10):
            f, g, h = (Polynomial(2, {(rng.randint(0, 2), rng.randint(0, 2)):
                                      rng.randint(-4, 4) for _ in range(3)})
                       for _ in range(3))
            c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            assert spec.value(f, g) == spec.value(g, f)
            assert spec.value(f + c * h, g) \
                == spec.value(f, g) + c * spec.value(h, g)


def test_gram_all_zero_for_eigenspace():
    spec = SingularProduct(2, (H,), 2)
    basis = u_space(2, (H,), 2, 3)
    rep = gram(spec, [(str(k), p) for k, p in basis.elements],
               labeled(monoms(2, 2), "m"))
    assert rep.all_zero
    data = rep.to_json()
    assert data["orthogonal_to_lower_degree"] is True


def test_gram_single_entry():
    spec = ClassicalProduct(ParamVector([0, 0, 0]))
    rep = gram(spec, labeled([ONE]))
    assert rep.matrix == [[Fraction(1)]]
    assert rep.positive_definite


def test_orthogonalize_matches_monic_companion():
    gamma = ParamVector([0, 0, 0])
    spec = ClassicalProduct(gamma)
    out = orthogonalize(spec, [ONE, X])
    assert out == [ONE, X - Fraction(1, 3)]
    assert out[1] == monomial_element(gamma, (1, 0))


def test_orthogonalize_keeps_orthogonal_input():
    gamma = ParamVector([0, 0, 0])
    spec = ClassicalProduct(gamma)
    basis = [ONE, monomial_element(gamma, (1, 0))]
    assert orthogonalize(spec, basis) == basis


def test_orthogonalize_dependent_input():
    spec = ClassicalProduct(ParamVector([0, 0, 0]))
    with pytest.raises(DependentInput):
        orthogonalize(spec, [X, X])


def test_orthogonalize_under_sobolev_product():
    spec = SingularProduct(2, (), 3)
    basis = u_space(2, (), 3, 3)
    out = orthogonalize(spec, basis.polys())
    rep = gram(spec, labeled(out))
    assert rep.diagonal and all(rep.matrix[i][i] > 0 for i in range(len(out)))


def test_derivative_product_lambda_weights():
    gamma = ParamVector([0, 0, 0])
    lam = {frozenset({0}): Fraction(2), frozenset({1}): Fraction(0)}
    spec = DerivativeProduct(gamma, 1, lam)
    f, g = X + Y, X * Y
    want = inner_product(f, g, gamma) + 2 * inner_product(
        f.partial(0), g.partial(0), gamma.shifted([1, 0, 1]))
    assert spec.value(f, g) == want


def test_one_variable_sobolev_products():
    fam_b = JacobiSingularBeta(H, Fraction(2))
    t = Polynomial.variable(1, 0)
    # lam f(1)g(1) + normalized integral of (1+x)^{3/2} f'g'
    assert fam_b.value(t, t) > 0
    both = JacobiSingularBoth(1, 1)
    assert both.value(t, Polynomial.constant(1, 1)) == 0
    assert both.value(t, t) > 0


def test_block_orthogonality_k1():
    tail = (Fraction(0), Fraction(0))
    spec = SingularProduct(2, tail, 1)
    for n in range(1, 4):
        core = [complement(2) * p
                for p in rodrigues_basis(ParamVector([0, 0, 1]), n - 1).polys()]
        top = h_space(ParamVector([0, 0, 0]), [2], n).polys()
        assert all(spec.value(p, q) == 0 for p in core for q in top)
