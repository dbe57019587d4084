"""GCD, squarefree and factorization routines delegated to sympy.

Polynomials cross the boundary through their coefficient dictionaries, so
no floating point value is ever created. Univariate factorization works
over the rationals and over the single supported extension field.
"""
from __future__ import annotations

from functools import reduce

from ..errors import DegreeCapExceeded, ZeroInput
from .field import QQ, unify_fields
from .poly import Poly

__all__ = [
    "to_sympy", "from_sympy", "gcd", "gcd_many", "is_squarefree", "squarefree_part",
    "factor_univariate", "factor_poly", "univariate_roots", "DEFAULT_DEGREE_CAP",
]

DEFAULT_DEGREE_CAP = 256

_GENS = {}


def _gens(n):
    if n not in _GENS:
        from sympy import symbols

        _GENS[n] = symbols(" ".join(f"z{i}" for i in range(n))) if n > 1 else (symbols("z0"),)
    return _GENS[n]


def to_sympy(p: Poly, field=None):
    from sympy import Poly as SPoly

    field = field or p.field
    dom = field.sympy_domain()
    rep = {e: field.to_domain(c) for e, c in p.terms.items()}
    if not rep:
        rep = {(0,) * p.nvars: dom.zero}
    return SPoly.from_dict(rep, *_gens(p.nvars), domain=dom)


def from_sympy(sp, nvars: int, field) -> Poly:
    rep = sp.rep.to_dict() if hasattr(sp.rep, "to_dict") else sp.as_dict()
    return Poly({tuple(e): field.from_domain(c) for e, c in rep.items()}, nvars, field)


def _normalize(p: Poly) -> Poly:
    """Scale so the lex-leading coefficient is one."""
    if not p.terms:
        return p
    lc = p.terms[max(p.terms)]
    return p / lc


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic (lex-leading coefficient 1) greatest common divisor."""
    field = unify_fields(f.field, g.field)
    if not f.terms:
        return _normalize(g.to_field(field))
    if not g.terms:
        return _normalize(f.to_field(field))
    if f.is_constant() or g.is_constant():
        return Poly.const(1, f.nvars, field)
    h = to_sympy(f, field).gcd(to_sympy(g, field))
    return _normalize(from_sympy(h, f.nvars, field))


def gcd_many(*ps: Poly) -> Poly:
    return reduce(gcd, ps)


def is_squarefree(f: Poly) -> bool:
    """True when no square of a nonconstant polynomial divides ``f``."""
    if not f.terms:
        raise ZeroInput("squarefree test of zero")
    if f.is_constant():
        return True
    g = f
    for i in range(f.nvars):
        g = gcd(g, f.diff(i))
        if g.is_constant():
            return True
    return g.is_constant()


def squarefree_part(f: Poly) -> Poly:
    g = f
    for i in range(f.nvars):
        g = gcd(g, f.diff(i))
    return f.divexact(g)


def factor_univariate(p: Poly, field=None, cap: int = DEFAULT_DEGREE_CAP):
    """Factor a univariate polynomial into monic irreducibles.

    Returns
    -------
    (constant, [(factor, multiplicity), ...])
        Factors are monic univariate :class:`Poly` objects, sorted by degree
        and then by coefficients for determinism.
    """
    if p.nvars != 1:
        raise ValueError("factor_univariate expects a univariate polynomial")
    if not p.terms:
        raise ZeroInput("factorization of zero")
    if p.degree() > cap:
        raise DegreeCapExceeded(f"degree {p.degree()} exceeds factorization cap {cap}")
    field = field or p.field
    p = p.to_field(field)
    if p.is_constant():
        return p.constant_term(), []
    c, facs = to_sympy(p, field).factor_list()
    out = []
    for fac, m in facs:
        q = from_sympy(fac, 1, field)
        lc = q.coeff((q.degree(),))
        out.append((q / lc, m))
    lead = p.coeff((p.degree(),))
    out.sort(key=lambda fm: (fm[0].degree(), _sort_key(fm[0])))
    return lead, out


def _sort_key(p: Poly):
    return tuple(str(p.coeff((i,))) for i in range(p.degree() + 1))


def factor_poly(p: Poly):
    """Irreducible factors over the rationals of a multivariate polynomial."""
    if not p.terms:
        raise ZeroInput("factorization of zero")
    c, facs = to_sympy(p).factor_list()
    out = [(_normalize(from_sympy(f, p.nvars, p.field)), m) for f, m in facs]
    out.sort(key=lambda fm: (fm[0].degree(), fm[0].fmt()))
    return out


def univariate_roots(p: Poly, field=None):
    """Split a univariate polynomial over ``field``.

    Returns
    -------
    (roots, orbits)
        ``roots`` lists ``(root, multiplicity)`` for the linear factors and
        ``orbits`` lists ``(irreducible factor, multiplicity)`` for the rest.
    """
    _, facs = factor_univariate(p, field)
    roots, orbits = [], []
    for f, m in facs:
        if f.degree() == 1:
            roots.append((-f.coeff((0,)), m))
        else:
            orbits.append((f, m))
    return roots, orbits
