"""Germs of holomorphic foliations ``P dx + Q dy = 0`` at the origin.

The dual vector field is ``v = -Q d/dx + P d/dy``. A curve ``f = 0`` is
invariant when ``f`` divides ``P f_y - Q f_x``, the coefficient of
``omega ^ df``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .curves import (
    INFINITE, BranchParam, Curve, branch_pullback_order, intersection_multiplicity,
    newton_puiseux, DEFAULT_TRUNC, MAX_TRUNC,
)
from .errors import (
    CommonComponent, DegeneratePolar, GenericityFailure, IsSeparatrix, NonIsolated,
    NotSeparatrix, TruncationInsufficient, ZeroInput,
)
from .exactalg import Poly, QQ, gcd, unify_fields

__all__ = [
    "LocalFoliation", "saturate", "hamiltonian", "alg_multiplicity", "milnor_number",
    "polar_curve", "is_invariant", "tangency_order", "milnor_along", "polar_intersection",
    "polar_intersection_branch", "PolarSample", "POLAR_SAMPLES",
]

POLAR_SAMPLES = 5


class LocalFoliation:
    """Saturated germ of foliation given by ``omega = P dx + Q dy``.

    Use :func:`saturate` to build one from arbitrary coefficients.
    """

    __slots__ = ("P", "Q", "field", "discarded")

    def __init__(self, P: Poly, Q: Poly, discarded: Optional[Poly] = None):
        field = unify_fields(P.field, Q.field)
        if not P.terms and not Q.terms:
            raise ZeroInput("both coefficients vanish")
        self.P = P.to_field(field)
        self.Q = Q.to_field(field)
        self.field = field
        self.discarded = discarded if discarded is not None else Poly.const(1, 2, field)

    @property
    def vector_field(self):
        """Components ``(-Q, P)`` of the dual vector field."""
        return (-self.Q, self.P)

    def is_singular(self) -> bool:
        return not self.P.constant_term() and not self.Q.constant_term()

    def to_field(self, field) -> "LocalFoliation":
        return LocalFoliation(self.P.to_field(field), self.Q.to_field(field), self.discarded)

    def wedge(self, f: Poly) -> Poly:
        """Coefficient of ``omega ^ df``, that is ``P f_y - Q f_x``."""
        return self.P * f.diff(1) - self.Q * f.diff(0)

    def __eq__(self, other):
        return isinstance(other, LocalFoliation) and self.P == other.P and self.Q == other.Q

    def __hash__(self):
        return hash((self.P, self.Q))

    def fmt(self) -> str:
        return f"({self.P.fmt()}) dx + ({self.Q.fmt()}) dy"

    def __repr__(self):
        return f"LocalFoliation[{self.fmt()}]"


def saturate(P_raw: Poly, Q_raw: Poly) -> LocalFoliation:
    """Divide both coefficients by their gcd.

    Examples
    --------
    >>> from polarfol.exactalg import x_, y_
    >>> x, y = x_(), y_()
    >>> saturate(x * y, x * x**2).fmt()
    '(y) dx + (x^2) dy'
    """
    if not P_raw.terms and not Q_raw.terms:
        raise ZeroInput("both coefficients vanish")
    g = gcd(P_raw, Q_raw)
    if g.is_constant():
        return LocalFoliation(P_raw, Q_raw, g)
    return LocalFoliation(P_raw.divexact(g), Q_raw.divexact(g), g)


def hamiltonian(f: Poly) -> LocalFoliation:
    """The foliation ``df = 0``, written ``f_x dx + f_y dy``."""
    if not f.terms:
        raise ZeroInput("hamiltonian of zero")
    return saturate(f.diff(0), f.diff(1))


def alg_multiplicity(F: LocalFoliation) -> int:
    """``nu_0(F) = min(ord P, ord Q)``."""
    return min(p.order() for p in (F.P, F.Q) if p.terms)


def milnor_number(F: LocalFoliation, rng=None) -> int:
    """``mu_0(F) = i_0(P, Q)``."""
    if not F.is_singular():
        return 0
    v = intersection_multiplicity(F.P, F.Q, rng)
    if v is INFINITE:
        raise NonIsolated("singularity is not isolated")
    return v


@dataclass
class PolarCurve:
    """The polar ``a P + b Q = 0``; ``reduced`` drops repeated factors."""

    equation: Poly
    slope: tuple

    @property
    def reduced(self) -> Poly:
        from .exactalg import squarefree_part

        return squarefree_part(self.equation)


def polar_curve(F: LocalFoliation, a, b) -> PolarCurve:
    """Polar curve of slope ``(a:b)``; for the radial germ this is ``a y - b x``."""
    if not a and not b:
        raise ValueError("slope (0:0) is not a point of P^1")
    h = F.P * a + F.Q * b
    if not h.terms:
        raise DegeneratePolar(f"a P + b Q vanishes identically for ({a}:{b})")
    return PolarCurve(h, (a, b))


def is_invariant(F: LocalFoliation, c) -> bool:
    """Exact test that ``f`` divides the coefficient of ``omega ^ df``."""
    f = c.equation if isinstance(c, Curve) else c
    w = F.wedge(f)
    if not w.terms:
        return True
    return w.divexact(f) is not None


def _pullback_form(F: LocalFoliation, b: BranchParam):
    """The series ``a(t)`` with ``gamma^* omega = a(t) dt``."""
    return b.evaluate(F.P) * b.x.derivative() + b.evaluate(F.Q) * b.y.derivative()


def _branch_is_invariant(F: LocalFoliation, b: BranchParam) -> bool:
    if b.source is None:
        raise ValueError("branch without a source curve")
    try:
        branch_pullback_order(b, F.wedge(b.source))
    except CommonComponent:
        return True
    return False


def tangency_order(F: LocalFoliation, b: BranchParam) -> int:
    """``tau_0(F, B) = ord_t (P(gamma) x' + Q(gamma) y')``."""
    if _branch_is_invariant(F, b):
        raise IsSeparatrix("the branch is invariant")
    n = b.trunc or DEFAULT_TRUNC
    while True:
        s = _pullback_form(F, b)
        try:
            return s.valuation()
        except TruncationInsufficient:
            if n >= MAX_TRUNC:
                raise
            n *= 2
            b = b.refine(n)


def _ord(b, g):
    try:
        return branch_pullback_order(b, g)
    except CommonComponent:
        return INFINITE


def milnor_along(F: LocalFoliation, b: BranchParam, check: bool = True) -> int:
    """``mu_0(F, B)`` from the orders of ``Q`` and ``P`` along the branch.

    Both clauses ``ord Q(gamma) - ord x + 1`` and ``ord P(gamma) - ord y + 1``
    are evaluated when defined and must agree. ``check=False`` skips the
    invariance test, for branches produced by the reduction (which carry no
    equation).
    """
    if check and not _branch_is_invariant(F, b):
        raise NotSeparatrix("the branch is not invariant")
    vals = []
    if not b.x.is_exact_zero():
        vals.append(_ord(b, F.Q) - b.x.valuation() + 1)
    if not b.y.is_exact_zero():
        vals.append(_ord(b, F.P) - b.y.valuation() + 1)
    if any(v is INFINITE for v in vals) or len(set(vals)) != 1:
        raise ArithmeticError(f"inconsistent multiplicities along the branch: {vals}")
    return vals[0]


@dataclass
class PolarSample:
    """Evidence for the generic polar intersection number."""

    value: int
    slopes: list
    values: list
    seed: object = None
    exact: Optional[int] = None


def _random_slope(rng):
    from gmpy2 import mpq

    return (mpq(1), mpq(rng.randint(-60, 60), rng.randint(1, 9)))


def polar_intersection_branch(F: LocalFoliation, b: BranchParam) -> int:
    """Generic ``i(aP + bQ, B)`` for one branch: ``min(ord P(gamma), ord Q(gamma))``.

    The leading terms of ``P(gamma)`` and ``Q(gamma)`` cancel for at most one
    slope, so this is the value for every slope outside a finite set.
    """
    op, oq = _ord(b, F.P), _ord(b, F.Q)
    if op is INFINITE and oq is INFINITE:
        raise CommonComponent("both coefficients vanish on the branch")
    return min(op, oq)


def polar_intersection(F: LocalFoliation, c, rng=None, samples: int = POLAR_SAMPLES,
                       branches=None, evidence: bool = False):
    """Polar intersection number ``p_0(F, C)``.

    The polar ``aP + bQ`` is pulled back to every branch of ``C`` for
    ``samples`` random slopes; the minimum must be attained at least twice
    and must equal the slope-free value ``sum min(ord P, ord Q)``.

    Returns
    -------
    int or PolarSample
        The value, or the full sampling record when ``evidence`` is true.
    """
    rng = rng or random.Random(0)
    if branches is None:
        branches = newton_puiseux(c if isinstance(c, Curve) else Curve(c))
    exact = 0
    series = []
    for b in branches:
        exact += b.orbit_size * polar_intersection_branch(F, b)
        series.append(b)
    slopes, values = [], []
    while len(slopes) < samples:
        a, bb = _random_slope(rng)
        h = F.P * a + F.Q * bb
        if not h.terms:
            # P and Q are proportional: only this one slope is degenerate
            continue
        tot = 0
        for br in series:
            o = _ord(br, h)
            tot = tot + (o if o is INFINITE else br.orbit_size * o)
        slopes.append((a, bb))
        values.append(tot)
    finite = [v for v in values if v is not INFINITE]
    if not finite:
        raise CommonComponent("every sampled polar shares a branch with the curve")
    m = min(finite)
    if values.count(m) < 2 or m != exact:
        raise GenericityFailure(f"polar sampling inconclusive: {values} vs {exact}")
    if evidence:
        return PolarSample(m, slopes, values, exact=exact)
    return m
