"""Polar invariants of holomorphic foliation germs in the plane.

The package computes, in exact arithmetic, the algebraic multiplicity and
Milnor number of a germ ``P dx + Q dy``, its reduction of singularities and
separatrices, polar intersection numbers along invariant curves, the polar
excess (which equals the GSV index), and audits the degree bound for
invariant curves of foliations of the projective plane.
"""

__version__ = "0.1.0"

from .curves import (  # noqa: E402
    INFINITE, BranchParam, Curve, curve_milnor, curve_multiplicity, intersection_multiplicity,
    newton_puiseux,
)
from .foliation import (  # noqa: E402
    LocalFoliation, alg_multiplicity, hamiltonian, is_invariant, milnor_along, milnor_number,
    polar_curve, polar_intersection, saturate, tangency_order,
)
from .reduction import (  # noqa: E402
    is_dicritical, is_generalized_curve, is_second_type, reduce, separatrices,
)
from .gsv import gsv_index, polar_excess, union_law_check  # noqa: E402
from .projective import (  # noqa: E402
    ProjCurve, ProjFoliation, from_homogeneous, global_polar, logarithmic, poincare_audit,
)
from .parsing import parse_form, parse_poly  # noqa: E402

__all__ = [
    "INFINITE", "BranchParam", "Curve", "curve_milnor", "curve_multiplicity",
    "intersection_multiplicity", "newton_puiseux", "LocalFoliation", "alg_multiplicity",
    "hamiltonian", "is_invariant", "milnor_along", "milnor_number", "polar_curve",
    "polar_intersection", "saturate", "tangency_order", "is_dicritical", "is_generalized_curve",
    "is_second_type", "reduce", "separatrices", "gsv_index", "polar_excess", "union_law_check",
    "ProjCurve", "ProjFoliation", "from_homogeneous", "global_polar", "logarithmic",
    "poincare_audit", "parse_form", "parse_poly",
]
