"""Blow-up of the origin for foliation germs, curves and branches.

The x-chart is ``(x, y) = (X, X V)``; a point ``V = c`` of the exceptional
line is centred with ``V = Y + c``. The y-chart is only used at its origin,
and its coordinates are swapped so that the exceptional line is always
``{X = 0}``: ``(x, y) = (X Y, X)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .curves import BranchParam, Curve, curve_multiplicity
from .errors import Dicritical, NotSeparatrix, UnsupportedExtensionTower
from .exactalg import QQ, AlgElem, ExtensionField, Poly, UniSeries, factor_univariate, gcd
from .foliation import (
    LocalFoliation, _branch_is_invariant, alg_multiplicity, polar_intersection_branch,
)

__all__ = [
    "NearPoint", "BlowupResult", "blowup_foliation", "singular_points_on_exceptional",
    "localize", "strict_transform_curve", "points_on_exceptional_curve", "localize_curve",
    "strict_transform_branch", "chart_map_series", "polar_blowup_check", "BlowupCheck",
]


@dataclass(frozen=True)
class NearPoint:
    """A point of the exceptional line of one blow-up.

    ``chart`` is ``"x"`` (coordinate ``coord`` of ``V``) or ``"y"`` (the
    origin of the y-chart, the direction of ``x = 0``). Irrational points are
    carried by a generator of an extension field together with its minimal
    polynomial ``orbit_poly``; such a point stands for ``orbit_size``
    conjugate points. ``old_axis`` names the axis of the previous
    coordinates whose strict transform passes through the point.
    """

    chart: str
    coord: object
    field: object
    orbit_size: int = 1
    orbit_poly: Optional[tuple] = None

    @property
    def old_axis(self):
        if self.chart == "y":
            return "x"
        if self.coord == 0:
            return "y"
        return None

    def key(self):
        if self.chart == "y":
            return ("y",)
        if self.orbit_poly is not None:
            return ("x", "orbit", tuple(str(c) for c in self.orbit_poly))
        return ("x", str(self.coord))

    def label(self) -> str:
        if self.chart == "y":
            return "u=0"
        if self.orbit_poly is not None:
            poly = Poly.from_univariate(self.orbit_poly).fmt(("a",))
            return f"v=a ({poly}=0)"
        c = self.coord
        s = c._fmt() if isinstance(c, AlgElem) else str(c)
        return f"v={s}"

    def sort_key(self):
        return (0 if self.chart == "x" else 1, self.orbit_poly is not None, self.label())


@dataclass
class BlowupResult:
    """Transforms of a foliation germ in both charts.

    ``x_chart`` is expressed in ``(X, V)``; ``y_chart`` in the swapped
    coordinates ``(X, Y) = (y, u)``. ``exponent`` is the power of the
    exceptional equation that was divided out.
    """

    source: LocalFoliation
    x_chart: LocalFoliation
    y_chart: LocalFoliation
    dicritical: bool
    exponent: int
    nu: int


def blowup_foliation(F: LocalFoliation) -> BlowupResult:
    """Blow up the origin.

    The exceptional line is invariant unless ``x P_nu + y Q_nu`` vanishes
    identically; then the germ is dicritical and ``nu + 1`` is divided out.
    """
    field = F.field
    nu = alg_multiplicity(F)
    X, Y = Poly.var(0, 2, field), Poly.var(1, 2, field)
    Pn, Qn = F.P.homogeneous_part(nu), F.Q.homogeneous_part(nu)
    dicritical = not (X * Pn + Y * Qn).terms
    e = nu + 1 if dicritical else nu
    # x-chart (X, V)
    Pxv, Qxv = F.P.subs([X, X * Y]), F.Q.subs([X, X * Y])
    Pxv = Pxv if isinstance(Pxv, Poly) else Poly.const(Pxv, 2, field)
    Qxv = Qxv if isinstance(Qxv, Poly) else Poly.const(Qxv, 2, field)
    A = (Pxv + Y * Qxv).shift_exponents((e, 0))
    B = (X * Qxv).shift_exponents((e, 0))
    # y-chart, already swapped: x = X Y, y = X
    Pyc, Qyc = F.P.subs([X * Y, X]), F.Q.subs([X * Y, X])
    Pyc = Pyc if isinstance(Pyc, Poly) else Poly.const(Pyc, 2, field)
    Qyc = Qyc if isinstance(Qyc, Poly) else Poly.const(Qyc, 2, field)
    A2 = (Y * Pyc + Qyc).shift_exponents((e, 0))
    B2 = (X * Pyc).shift_exponents((e, 0))
    for a, b in ((A, B), (A2, B2)):
        if a.terms and b.terms and a.ord_in(0) > 0 and b.ord_in(0) > 0:
            raise ArithmeticError("transform keeps an exceptional factor")
    return BlowupResult(F, LocalFoliation(A, B), LocalFoliation(A2, B2), dicritical, e, nu)


def _restrict_to_E(p: Poly) -> Poly:
    """``p(0, v)`` as a univariate polynomial."""
    return Poly({(j,): c for (i, j), c in p.terms.items() if i == 0}, 1, p.field)


def _points_from_univariate(T: Poly, field, chart_y: bool):
    """Near points for the roots of ``T`` (x-chart) plus optionally the y-chart origin."""
    pts = []
    if T.terms and not T.is_constant():
        _, facs = factor_univariate(T, field)
        for fac, _m in facs:
            if fac.degree() == 1:
                c = -fac.coeff((0,))
                pts.append(NearPoint("x", field.coerce(c), field))
            else:
                if isinstance(field, ExtensionField):
                    raise UnsupportedExtensionTower(
                        "point of the exceptional line needs a second extension",
                        tuple(fac.coeff((k,)) for k in range(fac.degree() + 1)))
                mp = tuple(fac.coeff((k,)) for k in range(fac.degree() + 1))
                K = ExtensionField(mp, name="a", check=False)
                pts.append(NearPoint("x", K.gen, K, fac.degree(), mp))
    if chart_y:
        pts.append(NearPoint("y", None, field))
    pts.sort(key=NearPoint.sort_key)
    return pts


def singular_points_on_exceptional(res: BlowupResult):
    """Singular points of the transformed foliation on the exceptional line."""
    F1, F2 = res.x_chart, res.y_chart
    a, b = _restrict_to_E(F1.P), _restrict_to_E(F1.Q)
    if not a.terms:
        T = b
    elif not b.terms:
        T = a
    else:
        T = gcd(a, b)
    if not T.terms:
        raise ArithmeticError("foliation singular along the whole exceptional line")
    y_sing = not F2.P.constant_term() and not F2.Q.constant_term()
    return _points_from_univariate(T, res.source.field, y_sing)


def localize(res: BlowupResult, p: NearPoint) -> LocalFoliation:
    """Germ of the transformed foliation centred at ``p``."""
    if p.chart == "y":
        return res.y_chart.to_field(p.field)
    G = res.x_chart.to_field(p.field)
    return LocalFoliation(_translate(G.P, p.coord), _translate(G.Q, p.coord))


def localize_at(res: BlowupResult, chart: str, c, field) -> LocalFoliation:
    if chart == "y":
        return res.y_chart.to_field(field)
    G = res.x_chart.to_field(field)
    return LocalFoliation(_translate(G.P, field.coerce(c)), _translate(G.Q, field.coerce(c)))


def _translate(p: Poly, c) -> Poly:
    if not c:
        return p
    X, Y = Poly.var(0, 2, p.field), Poly.var(1, 2, p.field)
    r = p.subs([X, Y + c])
    return r if isinstance(r, Poly) else Poly.const(r, 2, p.field)


# ---------------------------------------------------------------------------
# curves
# ---------------------------------------------------------------------------

def strict_transform_curve(c) -> tuple:
    """Strict transforms ``(x-chart, y-chart)`` of ``f``, divided by ``x^r``."""
    f = c.equation if isinstance(c, Curve) else c
    r = f.order()
    X, Y = Poly.var(0, 2, f.field), Poly.var(1, 2, f.field)
    fx = f.subs([X, X * Y]).shift_exponents((r, 0))
    fy = f.subs([X * Y, X]).shift_exponents((r, 0))
    return fx, fy


def points_on_exceptional_curve(c):
    """Points where the strict transform of ``c`` meets the exceptional line."""
    f = c.equation if isinstance(c, Curve) else c
    fx, fy = strict_transform_curve(f)
    return _points_from_univariate(_restrict_to_E(fx), f.field, not fy.constant_term())


def localize_curve(c, p: NearPoint) -> Poly:
    fx, fy = strict_transform_curve(c)
    if p.chart == "y":
        return fy.to_field(p.field)
    return _translate(fx.to_field(p.field), p.coord)


# ---------------------------------------------------------------------------
# branches
# ---------------------------------------------------------------------------

def chart_map_series(chart: str, c, X: UniSeries, Y: UniSeries):
    """Blow down a parametrization from a chart point to the parent coordinates."""
    if chart == "y":
        return X * Y, X
    return X, X * (Y + c)


def branch_chart(b: BranchParam):
    """Chart and coordinate of the point where the strict transform of ``b`` meets E."""
    if b.x.is_exact_zero():
        return "y", None
    if b.y.is_exact_zero():
        return "x", b.field.zero
    ox, oy = b.x.valuation(), b.y.valuation()
    if ox <= oy:
        c = b.y.coefficient(ox) / b.x.coefficient(ox) if oy == ox else b.field.zero
        return "x", c
    return "y", None


def strict_transform_branch(b: BranchParam):
    """``(chart, coord, branch)`` of the strict transform localized on E."""
    chart, c = branch_chart(b)
    if chart == "y":
        nb = BranchParam(b.y, b.x.divide(b.y), b.field, b.orbit_size)
    else:
        yv = b.y.divide(b.x) if not b.y.is_exact_zero() else b.y
        nb = BranchParam(b.x, yv - c if c else yv, b.field, b.orbit_size)
    if b.source is not None:
        fx, fy = strict_transform_curve(b.source)
        src = fy if chart == "y" else _translate(fx.to_field(b.field), c)
        nb.source = src.to_field(b.field)
    nb.trunc = b.trunc
    parent = b

    def refiner(n, parent=parent):
        return strict_transform_branch(parent.refine(n))[2]

    nb.refiner = refiner
    return chart, c, nb


@dataclass
class BlowupCheck:
    """Both sides of the polar blow-up formula for one separatrix."""

    upstairs: int
    p0: int
    nu_strict: int
    nu_F: int
    nu_B: int
    dicritical: bool
    rhs: int
    holds: bool


def polar_blowup_check(F: LocalFoliation, b: BranchParam) -> BlowupCheck:
    """Compare ``p(F~, B~)`` upstairs with ``p0(F,B) + nu(B~) - e nu0(B)``.

    ``e`` is ``nu0(F)``, or ``nu0(F) + 1`` when the first blow-up is dicritical.
    """
    if not _branch_is_invariant(F, b):
        raise NotSeparatrix("polar blow-up formula needs a separatrix")
    res = blowup_foliation(F)
    chart, c, nb = strict_transform_branch(b)
    G = localize_at(res, chart, c, b.field if b.field != QQ else F.field)
    up = polar_intersection_branch(G, nb)
    p0 = polar_intersection_branch(F, b)
    nus = nb.multiplicity()
    nub = b.multiplicity()
    rhs = p0 + nus - res.exponent * nub
    return BlowupCheck(up, p0, nus, res.nu, nub, res.dicritical, rhs, up == rhs)
