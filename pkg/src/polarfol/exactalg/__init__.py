"""Exact scalars, polynomials, truncated series and elimination."""
from .field import QQ, Q, RationalField, ExtensionField, AlgElem, field_of, unify_fields
from .poly import Poly, BiPoly, x_, y_
from .series import UniSeries, TruncSeries
from .resultant import resultant_elim_y, shear, linear_change, det, sylvester_matrix
from .algebra import (gcd, gcd_many, is_squarefree, squarefree_part, factor_univariate,
                      factor_poly, univariate_roots)
from ..errors import ZeroInput, TruncationInsufficient


def order(p) -> int:
    """Minimal total degree of a nonzero term of a polynomial or series."""
    return p.order()


def initial_form(p: Poly) -> Poly:
    """Homogeneous part of lowest degree."""
    return p.initial_form()


__all__ = [
    "QQ", "Q", "RationalField", "ExtensionField", "AlgElem", "field_of", "unify_fields",
    "Poly", "BiPoly", "x_", "y_", "UniSeries", "TruncSeries", "resultant_elim_y", "shear",
    "linear_change", "det", "sylvester_matrix", "gcd", "gcd_many", "is_squarefree",
    "squarefree_part", "factor_univariate", "factor_poly", "univariate_roots", "order",
    "initial_form",
]
