"""Formal plane curve germs at the origin.

Branches are found with the rational Newton–Puiseux algorithm, which keeps
all coefficients in the base field or in one simple extension. Intersection
numbers come from resultants after a generic linear change of coordinates
and can be cross-checked through branch pullbacks.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import total_ordering
from math import gcd as igcd
from typing import Callable, Optional

from .errors import (
    CommonComponent, GenericityFailure, NonIsolated, TruncationInsufficient,
    UnsupportedExtensionTower, ZeroInput,
)
from .exactalg import (
    QQ, AlgElem, ExtensionField, Poly, UniSeries, factor_univariate, gcd,
    is_squarefree, resultant_elim_y,
)
from .exactalg.resultant import linear_change

__all__ = [
    "INFINITE", "Curve", "BranchParam", "newton_puiseux", "curve_multiplicity",
    "intersection_multiplicity", "intersection_via_branches", "branch_pullback_order",
    "curve_milnor", "noether_check", "DEFAULT_TRUNC", "MAX_TRUNC",
]

DEFAULT_TRUNC = 32
MAX_TRUNC = 512


@total_ordering
class _Infinite:
    """Sentinel for an infinite intersection number."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("INFINITE")

    def __repr__(self):
        return "INFINITE"

    def __add__(self, other):
        return self

    __radd__ = __add__


INFINITE = _Infinite()


class Curve:
    """A reduced curve germ ``f = 0`` through the origin.

    Parameters
    ----------
    equation : Poly
        Bivariate polynomial with ``f(0, 0) = 0``; must be squarefree.
    """

    __slots__ = ("equation", "field")

    def __init__(self, equation: Poly, check: bool = True):
        if equation.nvars != 2:
            raise ValueError("a plane curve needs a bivariate equation")
        if not equation.terms:
            raise ZeroInput("the zero polynomial does not define a curve")
        if equation.constant_term():
            raise ValueError("curve does not pass through the origin")
        if check and not is_squarefree(equation):
            raise ValueError("curve equation is not squarefree")
        self.equation = equation
        self.field = equation.field

    def __eq__(self, other):
        return isinstance(other, Curve) and self.equation == other.equation

    def __hash__(self):
        return hash(self.equation)

    def __mul__(self, other: "Curve") -> "Curve":
        return Curve(self.equation * other.equation)

    def __repr__(self):
        return f"Curve({self.equation})"


@dataclass
class BranchParam:
    """Primitive parametrization ``t -> (x(t), y(t))`` of one branch.

    ``orbit_size`` counts the Galois conjugates represented by this branch
    when its coefficients live in an extension; every additive invariant of
    the branch is multiplied by it when summing over a curve. ``source`` and
    ``index`` allow recomputation at a higher precision.
    """

    x: UniSeries
    y: UniSeries
    field: object = QQ
    orbit_size: int = 1
    source: Optional[Poly] = dc_field(default=None, repr=False, compare=False)
    index: Optional[int] = None
    trunc: Optional[int] = None
    refiner: Optional[Callable] = dc_field(default=None, repr=False, compare=False)

    @property
    def trunc_order(self):
        """Guaranteed precision in ``t`` (``None`` for an exact branch)."""
        ps = [p for p in (self.x.prec, self.y.prec) if p is not None]
        return min(ps) if ps else None

    def is_exact(self) -> bool:
        return self.x.prec is None and self.y.prec is None

    def multiplicity(self) -> int:
        """Multiplicity of the branch: the smaller of the orders of x and y."""
        vals = []
        for s in (self.x, self.y):
            if not s.is_exact_zero():
                try:
                    vals.append(s.valuation())
                except TruncationInsufficient:
                    pass
        return min(vals)

    def refine(self, n: int) -> "BranchParam":
        """The same branch recomputed with truncation order ``n``."""
        if self.is_exact():
            return self
        if self.refiner is not None:
            return self.refiner(n)
        if self.source is None:
            return self
        return newton_puiseux(Curve(self.source, check=False), n)[self.index]

    def evaluate(self, g: Poly) -> UniSeries:
        field = self.field if self.field != QQ else g.field
        g = g.to_field(field) if g.field != field else g
        r = g.subs([self.x, self.y])
        if not isinstance(r, UniSeries):
            r = UniSeries.const(r if r != 0 else 0, field)
        return r

    def fmt(self) -> str:
        return f"({self.x.fmt()}, {self.y.fmt()})"

    def __repr__(self):
        tag = f" x{self.orbit_size}" if self.orbit_size > 1 else ""
        return f"Branch{self.fmt()}{tag}"


# ---------------------------------------------------------------------------
# Newton–Puiseux
# ---------------------------------------------------------------------------

def _ext_gcd(a, b):
    if b == 0:
        return a, 1, 0
    g, s, t = _ext_gcd(b, a % b)
    return g, t, s - (a // b) * t


def _newton_edges(g: Poly):
    """Edges of the Newton polygon from ``(0, r)`` down to ``(i_min, 0)``.

    Returns a list of ``(m, q, (i1, j1), (i2, j2))`` with slope ``m/q``.
    """
    pts = {}
    for (i, j) in g.terms:
        if j not in pts or i < pts[j]:
            pts[j] = i
    r = min(j for j, i in pts.items() if i == 0)
    cur = (0, r)
    edges = []
    while cur[1] > 0:
        best = None
        for j, i in pts.items():
            if j >= cur[1]:
                continue
            num, den = i - cur[0], cur[1] - j
            if best is None or num * best[1] < best[0] * den or (
                    num * best[1] == best[0] * den and j < best[2][1]):
                best = (num, den, (i, j))
        num, den, nxt = best
        k = igcd(num, den)
        edges.append((num // k, den // k, cur, nxt))
        cur = nxt
    return edges


def _solve_ift(g: Poly, n: int, field) -> UniSeries:
    """Solve ``g(X, Y(X)) = 0`` with ``Y(0) = 0`` when ``g_Y(0,0) != 0``."""
    gy = g.diff(1)
    t = UniSeries.t(field)
    phi = UniSeries._raw([], None, field)
    p = 1
    while p < n:
        p = min(2 * p, n)
        ph = phi.with_prec(p)
        val = g.subs([t.with_prec(p), ph])
        der = gy.subs([t.with_prec(p), ph])
        if not isinstance(val, UniSeries):
            val = UniSeries.const(val, field).with_prec(p)
        if not isinstance(der, UniSeries):
            der = UniSeries.const(der, field).with_prec(p)
        corr = val.truncate(p) * der.truncate(p).inverse()
        phi = UniSeries._raw(list((phi - corr).truncate(p).c), None, field)
    return phi.with_prec(n)


def _edge_poly(g: Poly, m, q, top, bottom):
    i2, j2 = bottom
    coeffs = []
    s = 0
    while j2 + q * s <= top[1]:
        coeffs.append(g.coeff((i2 - m * s, j2 + q * s)))
        s += 1
    return Poly.from_univariate(coeffs, g.field)


def newton_puiseux(c: Curve, n: int = DEFAULT_TRUNC, max_depth: int = 64):
    """Branches of ``c`` at the origin.

    Parameters
    ----------
    c : Curve
        Reduced curve germ.
    n : int
        Truncation order of the implicit-function step; ``y(t)`` is known to
        at least this precision.

    Returns
    -------
    list of BranchParam
        One entry per branch, or per Galois orbit of conjugate branches.

    Raises
    ------
    UnsupportedExtensionTower
        When a branch would need a second algebraic extension.
    """
    f = c.equation
    base = f.field
    out = []
    # the axis x = 0 is the only branch invisible to expansions in powers of x
    if f.ord_in(0) > 0:
        out.append(BranchParam(UniSeries._raw([], None, base), UniSeries.t(base), base))
        f = f.shift_exponents((1, 0))
    if not f.constant_term():
        X, Y = Poly.var(0, 2, base), Poly.var(1, 2, base)
        _np_rec(f, X, Y, base, 1, n, out, 0, max_depth)
    for k, b in enumerate(out):
        b.source = c.equation
        b.index = k
        b.trunc = n
    return out


def _np_rec(g: Poly, xm: Poly, ym: Poly, field, orbit, n, out, depth, max_depth):
    if depth > max_depth:
        raise TruncationInsufficient("Newton-Puiseux recursion depth exceeded")
    if g.constant_term():
        return
    if g.ord_in(1) > 0:
        # Y = 0 is an exact branch
        t = UniSeries.t(field)
        zero = UniSeries._raw([], None, field)
        out.append(BranchParam(_as_series(xm.subs([t, zero]), field),
                               _as_series(ym.subs([t, zero]), field), field, orbit))
        g = g.shift_exponents((0, 1))
        if g.constant_term():
            return
    r = min(j for (i, j) in g.terms if i == 0)
    if r == 1:
        phi = _exact_if_root(g, _solve_ift(g, n, field), field)
        t = UniSeries.t(field)
        out.append(BranchParam(_as_series(xm.subs([t, phi]), field),
                               _as_series(ym.subs([t, phi]), field), field, orbit))
        return
    for m, q, top, bottom in _newton_edges(g):
        phi = _edge_poly(g, m, q, top, bottom)
        _, facs = factor_univariate(phi, field)
        l = q * bottom[0] + m * bottom[1]
        _, u, v = _ext_gcd(q, m)  # u*q + v*m = 1
        v = -v                   # now u*q - v*m = 1
        for fac, _mult in facs:
            if fac.degree() == 1:
                xi = -fac.coeff((0,))
                new_field, new_orbit = field, orbit
            else:
                if isinstance(field, ExtensionField):
                    raise UnsupportedExtensionTower(
                        "branch needs a second algebraic extension",
                        tuple(fac.coeff((k,)) for k in range(fac.degree() + 1)))
                new_field = ExtensionField(
                    [fac.coeff((k,)) for k in range(fac.degree() + 1)], name="a", check=False)
                xi = new_field.gen
                new_orbit = orbit * fac.degree()
            mu = _pow(xi, v, new_field)
            beta = _pow(xi, u, new_field)
            X1 = Poly.var(0, 2, new_field)
            Y1 = Poly.var(1, 2, new_field)
            sx = X1 ** q * mu
            sy = X1 ** m * (Y1 + beta)
            g1 = g.to_field(new_field).subs([sx, sy])
            g1 = g1.shift_exponents((l, 0))
            _np_rec(g1, xm.to_field(new_field).subs([sx, sy]),
                    ym.to_field(new_field).subs([sx, sy]),
                    new_field, new_orbit, n, out, depth + 1, max_depth)


def _exact_if_root(g: Poly, phi: UniSeries, field) -> UniSeries:
    """``phi`` as an exact polynomial when its visible part already solves ``g``."""
    c = list(phi.c)
    while c and not c[-1]:
        c.pop()
    if phi.prec is None or 2 * len(c) > phi.prec:
        return phi
    poly = UniSeries._raw(c, None, field)
    r = g.subs([UniSeries.t(field), poly])
    if isinstance(r, UniSeries) and r.is_exact_zero():
        return poly
    return phi


def _pow(a, k, field):
    a = field.coerce(a)
    if k >= 0:
        return a ** k
    return (1 / a) ** (-k) if not isinstance(a, AlgElem) else a.inverse() ** (-k)


def _as_series(v, field):
    if isinstance(v, UniSeries):
        return v
    return UniSeries.const(v, field) if v != 0 else UniSeries._raw([], None, field)


# ---------------------------------------------------------------------------
# multiplicities and intersection numbers
# ---------------------------------------------------------------------------

def curve_multiplicity(c: Curve) -> int:
    """Multiplicity ``nu_0`` of the curve: the order of its equation."""
    return c.equation.order()


def _eq(f):
    return f.equation if isinstance(f, Curve) else f


def intersection_multiplicity(f, g, rng: Optional[random.Random] = None, retries: int = 8):
    """Local intersection number ``i_0(f, g)`` at the origin.

    Common factors that are units at the origin are removed first; a common
    factor through the origin gives ``INFINITE``. The remaining pair is put
    in general position by ``(x, y) -> (x + c y, y)`` for two independent
    random ``c``; the order in ``x`` of the resultant in ``y`` is the answer
    when both agree.
    """
    f, g = _eq(f), _eq(g)
    if not f.terms or not g.terms:
        return INFINITE
    if f.constant_term() or g.constant_term():
        return 0
    h = gcd(f, g)
    if not h.is_constant():
        if not h.constant_term():
            return INFINITE
        f, g = f.divexact(h), g.divexact(h)
    if f.order() == 1 and g.order() == 1:
        a, b = f.homogeneous_part(1), g.homogeneous_part(1)
        if a.coeff((1, 0)) * b.coeff((0, 1)) - a.coeff((0, 1)) * b.coeff((1, 0)):
            return 1
    rng = rng or random.Random(0)
    for _ in range(retries):
        vals = []
        for _k in range(2):
            c = rng.randint(1, 97) * rng.choice((1, -1))
            vals.append(_res_order(linear_change(f, 1, c, 0, 1), linear_change(g, 1, c, 0, 1)))
        if vals[0] == vals[1] and vals[0] is not None:
            return vals[0]
    raise GenericityFailure("intersection number did not stabilize under random changes")


def _res_order(f: Poly, g: Poly):
    d1, d2 = f.degree(), g.degree()
    if f.deg_in(1) != d1 or g.deg_in(1) != d2:
        return None
    r = resultant_elim_y(f, g)
    if not r.terms:
        return None
    return r.order()


def branch_pullback_order(b: BranchParam, g: Poly, adaptive: bool = True) -> int:
    """``ord_t g(x(t), y(t))``.

    Raises
    ------
    CommonComponent
        When ``g`` vanishes identically on the branch.
    TruncationInsufficient
        When the order exceeds the available precision even after refining.
    """
    n = b.trunc or DEFAULT_TRUNC
    bound = None
    while True:
        s = b.evaluate(g)
        if s.is_exact_zero():
            raise CommonComponent("polynomial vanishes on the branch")
        try:
            v = s.valuation()
        except TruncationInsufficient:
            v = None
        if v is not None:
            return v
        if b.is_exact():
            raise CommonComponent("polynomial vanishes on the branch")
        if bound is None and b.source is not None:
            bound = _vanishing_bound(b.source, g)
        if bound is not None and s.prec is not None and s.prec > bound:
            raise CommonComponent("polynomial vanishes on the branch")
        if not adaptive or n >= MAX_TRUNC:
            raise TruncationInsufficient("pullback order exceeds precision", needed=2 * n)
        n *= 2
        b = b.refine(n)


def _vanishing_bound(f: Poly, g: Poly) -> int:
    """Upper bound for ``ord_t g(gamma)`` over branches of ``f`` not lying on ``g``.

    Such a branch belongs to ``f / gcd(f, g)``, which is coprime to ``g``.
    """
    h = gcd(f, g)
    return intersection_multiplicity(f.divexact(h), g)


def intersection_via_branches(c: Curve, g: Poly, n: int = DEFAULT_TRUNC):
    """``i_0(c, g)`` as the sum of pullback orders over the branches of ``c``."""
    total = 0
    for b in newton_puiseux(c, n):
        try:
            total += b.orbit_size * branch_pullback_order(b, g)
        except CommonComponent:
            return INFINITE
    return total


def curve_milnor(c: Curve, rng=None) -> int:
    """Milnor number ``i_0(f_x, f_y)``."""
    f = c.equation
    fx, fy = f.diff(0), f.diff(1)
    if fx.constant_term() or fy.constant_term():
        return 0
    v = intersection_multiplicity(fx, fy, rng)
    if v is INFINITE:
        raise NonIsolated("curve singularity is not isolated")
    return v


@dataclass
class NoetherRecord:
    lhs: object
    product: int
    near_points: list
    rhs: object
    holds: bool


def noether_check(c1: Curve, c2: Curve, rng=None) -> NoetherRecord:
    """Compare ``i_0(C1, C2)`` with ``nu(C1) nu(C2)`` plus the intersection
    numbers of the strict transforms at the common points of the first
    exceptional line."""
    from .blowup import points_on_exceptional_curve, localize_curve

    lhs = intersection_multiplicity(c1, c2, rng)
    prod = curve_multiplicity(c1) * curve_multiplicity(c2)
    near = []
    pts1 = {p.key(): p for p in points_on_exceptional_curve(c1)}
    for p in points_on_exceptional_curve(c2):
        if p.key() in pts1:
            g1 = localize_curve(c1, p)
            g2 = localize_curve(c2, p)
            v = intersection_multiplicity(g1, g2, rng)
            near.append((p.label(), p.orbit_size, v))
    rhs = prod
    for _, k, v in near:
        rhs = rhs + k * v
    return NoetherRecord(lhs, prod, near, rhs, lhs == rhs)
