"""Exact rational construction and verification of classical and Sobolev
orthogonal polynomials on the simplex T^d."""

from .bases import (Basis, apply_operator, biorthogonal_constant, eigencheck,
                    jacobi_negative_one_beta, jacobi_negative_one_one,
                    jacobi_norm, jacobi_p, jacobi_shifted, monomial_basis,
                    monomial_element, permuted_basis, permuted_element,
                    rodrigues_basis, rodrigues_element)
from .errors import (DependentInput, NonIntegrableWeight, NonPolynomialQuotient,
                     SobolexError, ZeroDenominator)
from .moments import (face_inner_product, inner_product, integral,
                      normalized_moment, vertex_eval)
from .polynomials import FaceId, Polynomial, monomials_of_degree, monomials_up_to
from .products import (ClassicalProduct, DerivativeProduct, GramReport,
                       JacobiSingularBeta, JacobiSingularBoth, SingularProduct,
                       TriangleAllSingular, TriangleBetaGammaSingular,
                       TriangleFirstTwoSingular, TriangleGammaSingular, gram,
                       orthogonalize)
from .scalars import binomial, factorial, pochhammer
from .spaces import expected_dimension, h_space, u_space, verify_u_space
from .weighted import ParamVector, WeightedForm, face_params

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
