"""Foliations of the projective plane and the Poincare-bound audit.

A foliation is a homogeneous 1-form ``T = A0 dX0 + A1 dX1 + A2 dX2`` with
``sum X_i A_i = 0`` and coprime coefficients; ``deg F = deg A_i - 1``.

The audit picks a line at infinity ``L`` transversal to the invariant curve
``S`` and avoiding ``Sing(F)``, sets ``G = {df = 0}`` for the affine
equation ``f`` of ``S``, and compares the polar curves ``Gamma_q`` of ``F``
and ``Sigma_q`` of ``G`` along ``S`` for random centres ``q``. With
``d = deg S``::

    d (deg F + 2 - d) = sum over r in Sing(F) n S of i_r(Gamma_q, S) - i_r(Sigma_q, S)

and at non-dicritical points each difference is the polar excess of the
local germ.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Optional

from gmpy2 import mpq

from .curves import INFINITE, Curve, intersection_multiplicity
from .errors import (
    DegenerateRadial, DicriticalPointOnS, EulerViolation, GenericityFailure,
    IncompleteSingularLocus, NoTransversalLineFound, NonHomogeneous, NotInvariant,
    ResidueSumNonzero, UnsupportedExtensionTower, ZeroInput,
)
from .exactalg import (
    QQ, AlgElem, ExtensionField, Poly, factor_poly, field_of, factor_univariate, gcd, gcd_many,
    is_squarefree, resultant_elim_y, unify_fields,
)
from .foliation import LocalFoliation, saturate
from .gsv import polar_excess
from .reduction import reduce

__all__ = [
    "ProjFoliation", "ProjCurve", "from_homogeneous", "from_affine", "global_polar",
    "is_invariant_proj", "logarithmic", "poincare_audit", "PoincareLedger", "PointRecord",
    "homogenize", "dehomogenize",
]

NAMES = ("X0", "X1", "X2")
AUDIT_CENTERS = 3
LINE_CANDIDATES = 40
CENTER_ATTEMPTS = 30


def _var3(i, field=QQ):
    return Poly.var(i, 3, field)


def _as_poly(v, nvars, field):
    return v if isinstance(v, Poly) else Poly.const(v, nvars, field)


def homogenize(p: Poly, degree: Optional[int] = None) -> Poly:
    """``X0^n p(X1/X0, X2/X0)`` with ``n = deg p`` unless given."""
    n = p.degree() if degree is None else degree
    return Poly._raw({(n - i - j, i, j): c for (i, j), c in p.terms.items()}, 3, p.field)


def dehomogenize(p: Poly) -> Poly:
    """``p(1, x, y)``."""
    out = {}
    for (_, i, j), c in p.terms.items():
        out[(i, j)] = out.get((i, j), p.field.zero) + c
    return Poly(out, 2, p.field)


class ProjFoliation:
    """Saturated foliation ``A0 dX0 + A1 dX1 + A2 dX2`` on the projective plane."""

    __slots__ = ("A", "field", "degree")

    def __init__(self, a0: Poly, a1: Poly, a2: Poly):
        self.field = unify_fields(a0.field, a1.field, a2.field)
        self.A = tuple(a.to_field(self.field) for a in (a0, a1, a2))
        self.degree = max(a.degree() for a in self.A) - 1

    def fmt(self) -> str:
        return ", ".join(a.fmt(NAMES) for a in self.A)

    def __repr__(self):
        return f"ProjFoliation[{self.fmt()}]"

    def __eq__(self, other):
        return isinstance(other, ProjFoliation) and self.A == other.A

    def __hash__(self):
        return hash(self.A)

    def wedge(self, s: Poly):
        """Components ``A_i S_j - A_j S_i`` of ``T ^ dS`` for ``(i,j) = (0,1), (0,2), (1,2)``."""
        ds = [s.diff(i) for i in range(3)]
        A = self.A
        return [A[i] * ds[j] - A[j] * ds[i] for i, j in ((0, 1), (0, 2), (1, 2))]

    def affine(self):
        """``(P, Q)`` of the chart ``X0 = 1``."""
        return dehomogenize(self.A[1]), dehomogenize(self.A[2])

    def transform(self, M) -> "ProjFoliation":
        """Pull back by ``X = M Y``; the new line ``Y0 = 0`` is ``M`` applied to ``X0 = 0``."""
        lin = _linear_forms(M, self.field)
        sub = [_as_poly(a.subs(lin), 3, self.field) for a in self.A]
        out = []
        for j in range(3):
            acc = Poly.zero(3, self.field)
            for i in range(3):
                if M[i][j]:
                    acc = acc + sub[i] * M[i][j]
            out.append(acc)
        return ProjFoliation(*out)


@dataclass
class ProjCurve:
    """Reduced homogeneous curve ``S = P1 ... Pn``."""

    equation: Poly
    check: bool = dc_field(default=True, repr=False, compare=False)

    def __post_init__(self):
        p = self.equation
        if not p.terms:
            raise ZeroInput("the zero polynomial defines no curve")
        if p.nvars != 3 or not p.is_homogeneous():
            raise NonHomogeneous("curve equation must be homogeneous in X0, X1, X2")
        if self.check and not is_squarefree(p):
            raise ValueError("curve equation is not squarefree")

    @property
    def degree(self) -> int:
        return self.equation.degree()

    @property
    def factors(self):
        """Irreducible factors with their degrees; over an extension the equation is kept whole."""
        if self.equation.field == QQ:
            facs = [f for f, _ in factor_poly(self.equation) if not f.is_constant()]
        else:
            facs = [self.equation]
        return [(f, f.degree()) for f in facs]

    def fmt(self) -> str:
        return self.equation.fmt(NAMES)

    def transform(self, M) -> "ProjCurve":
        lin = _linear_forms(M, self.equation.field)
        return ProjCurve(_as_poly(self.equation.subs(lin), 3, self.equation.field), check=False)


def _linear_forms(M, field):
    Y = [_var3(i, field) for i in range(3)]
    out = []
    for i in range(3):
        acc = Poly.zero(3, field)
        for j in range(3):
            if M[i][j]:
                acc = acc + Y[j] * M[i][j]
        out.append(acc)
    return out


def from_homogeneous(a0: Poly, a1: Poly, a2: Poly) -> ProjFoliation:
    """Check homogeneity and the Euler condition, then saturate.

    Raises
    ------
    NonHomogeneous
        When the coefficients are not homogeneous of one common degree.
    EulerViolation
        When ``X0 A0 + X1 A1 + X2 A2`` is not zero.
    """
    A = [a if a.nvars == 3 else None for a in (a0, a1, a2)]
    if any(a is None for a in A):
        raise NonHomogeneous("coefficients must be polynomials in X0, X1, X2")
    if all(not a.terms for a in A):
        raise ZeroInput("all coefficients vanish")
    degs = {a.degree() for a in A if a.terms}
    if len(degs) != 1 or any(a.terms and not a.is_homogeneous() for a in A):
        raise NonHomogeneous("coefficients must be homogeneous of one common degree")
    field = unify_fields(*(a.field for a in A))
    A = [a.to_field(field) for a in A]
    euler = sum((A[i] * _var3(i, field) for i in range(3)), Poly.zero(3, field))
    if euler.terms:
        raise EulerViolation(f"sum X_i A_i = {euler.fmt(NAMES)}")
    g = gcd_many(*[a for a in A if a.terms])
    if not g.is_constant():
        A = [a.divexact(g) if a.terms else a for a in A]
    if max(a.degree() for a in A) < 1:
        raise ValueError("saturated coefficients are constant")
    return ProjFoliation(*A)


def from_affine(F) -> ProjFoliation:
    """Extend ``P dx + Q dy`` to the projective plane."""
    P, Q = (F.P, F.Q) if isinstance(F, LocalFoliation) else F
    n = max(P.degree(), Q.degree())
    Ph, Qh = homogenize(P, n), homogenize(Q, n)
    X0, X1, X2 = (_var3(i, Ph.field) for i in range(3))
    return from_homogeneous(-(X1 * Ph + X2 * Qh), X0 * Ph, X0 * Qh)


def global_polar(F: ProjFoliation, q) -> ProjCurve:
    """Polar curve ``q0 A0 + q1 A1 + q2 A2`` of centre ``q``.

    Raises
    ------
    DegenerateRadial
        When ``F`` is the radial foliation centred at ``q``.
    """
    if not any(q):
        raise ValueError("(0:0:0) is not a point")
    h = Poly.zero(3, F.field)
    for qi, a in zip(q, F.A):
        if qi:
            h = h + a * qi
    if not h.terms:
        raise DegenerateRadial("the foliation is radial with centre q")
    return ProjCurve(h, check=False)


def is_invariant_proj(F: ProjFoliation, S) -> bool:
    """Exact test that ``S`` divides every component of ``T ^ dS``."""
    s = S.equation if isinstance(S, ProjCurve) else S
    return all(not w.terms or w.divexact(s) is not None for w in F.wedge(s))


def logarithmic(lambdas, ps) -> ProjFoliation:
    """Foliation of ``sum lambda_i dP_i / P_i`` with denominators cleared.

    Raises
    ------
    ResidueSumNonzero
        When ``sum lambda_i deg P_i`` is not zero.
    """
    if len(lambdas) != len(ps) or len(ps) < 2:
        raise ValueError("need matching residues and at least two polynomials")
    if any(not lam for lam in lambdas):
        raise ValueError("residues must be nonzero")
    tot = sum(lam * p.degree() for lam, p in zip(lambdas, ps))
    if tot:
        raise ResidueSumNonzero(f"sum lambda_i d_i = {tot}")
    field = unify_fields(*(p.field for p in ps), *(Poly.const(l).field for l in lambdas))
    ps = [p.to_field(field) for p in ps]
    A = [Poly.zero(3, field) for _ in range(3)]
    for i, (lam, p) in enumerate(zip(lambdas, ps)):
        rest = Poly.const(1, 3, field)
        for j, pj in enumerate(ps):
            if j != i:
                rest = rest * pj
        for k in range(3):
            A[k] = A[k] + rest * p.diff(k) * lam
    return from_homogeneous(*A)


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------

@dataclass
class PointRecord:
    """One point of ``Sing(F) n S`` (or a conjugate orbit of them)."""

    point: tuple
    affine: tuple
    orbit_size: int
    orbit_poly: Optional[str]
    gamma: list
    sigma: list
    difference: int
    delta: Optional[int]
    dicritical: bool
    generalized_curve: Optional[bool]
    full_separatrix_set: Optional[bool]

    def to_json(self):
        return dict(self.__dict__, point=list(self.point), affine=list(self.affine))


@dataclass
class PoincareLedger:
    line_at_infinity: str
    chart: list
    degree_S: int
    degree_F: int
    centers: list
    points: list
    bezout_totals: dict
    bound_slack: int
    weighted_sum: int
    eq10_holds: bool
    eq11_holds: Optional[bool]
    bound_holds: bool
    logarithmic_criterion: Optional[bool]
    complete: bool
    deficit: int
    evidence: dict = dc_field(default_factory=dict)

    def to_json(self):
        d = dict(self.__dict__)
        d["points"] = [p.to_json() for p in self.points]
        return d


def _fmt(v):
    return v._fmt() if isinstance(v, AlgElem) else str(v)


def _normalize_point(X):
    lead = next(v for v in X if v)
    return [v / lead for v in X]


def _random_matrix(rng):
    import sympy

    while True:
        M = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
        if sympy.Matrix(M).det():
            return [[mpq(v) for v in row] for row in M]


def _inverse(M):
    import sympy

    inv = sympy.Matrix([[sympy.Rational(int(v.numerator), int(v.denominator)) for v in row]
                        for row in M]).inv()
    return [[mpq(int(inv[i, j].p), int(inv[i, j].q)) for j in range(3)] for i in range(3)]


def _binary_restriction(p: Poly) -> Poly:
    """``p(0, 1, t)`` as a univariate polynomial."""
    return Poly({(k,): c for (i, _j, k), c in p.terms.items() if i == 0}, 1, p.field)


def _line_ok(FM: ProjFoliation, SM: Poly, d: int) -> bool:
    """``Y0 = 0`` meets ``S`` in ``d`` distinct points, misses ``Sing(F)``, and ``(0:0:1)`` is off ``S``."""
    if not SM.coeff((0, 0, d)):
        return False
    r = _binary_restriction(SM)
    if r.degree() != d or (d > 1 and not is_squarefree(r)):
        return False
    rs = [_binary_restriction(a) for a in FM.A]
    if not any(x.terms for x in rs):
        return False
    g = gcd_many(*[x for x in rs if x.terms])
    if not g.is_constant():
        return False
    return any(a.coeff((0, 0, FM.degree + 1)) for a in FM.A)


def _uni_at(p: Poly, alpha, field) -> Poly:
    """``p(alpha, t)`` as a univariate polynomial over ``field``."""
    out = {}
    for (i, j), c in p.terms.items():
        out[(j,)] = out.get((j,), field.zero) + field.coerce(c) * field.coerce(alpha) ** i
    return Poly(out, 1, field)


def _translate(p: Poly, a, b, field) -> Poly:
    x, y = Poly.var(0, 2, field), Poly.var(1, 2, field)
    return _as_poly(p.to_field(field).subs([x + a, y + b]), 2, field)


def _multiplicity(R: Poly, m: Poly) -> int:
    k = 0
    while R.terms and not R.is_constant():
        q = R.divexact(m)
        if q is None:
            break
        R, k = q, k + 1
    return k


def _strip(R: Poly, m: Poly, k: int) -> Poly:
    for _ in range(k):
        R = R.divexact(m)
    return R


def _proportional(a: Poly, b: Poly) -> bool:
    if not a.terms or not b.terms:
        return not a.terms and not b.terms
    ka, kb = max(a.terms), max(b.terms)
    if ka != kb:
        return False
    return a * b.terms[kb] == b * a.terms[ka]


def _locate(P, Q, f, base, rng):
    """Singular points of ``P dx + Q dy`` on ``f = 0``, grouped by the x-factor.

    Returns ``(groups, unresolved)``: ``groups`` lists ``(m, field, [(a, b)])``
    for irreducible x-factors ``m``; ``unresolved`` lists factors whose points
    need a second extension.
    """
    t1, t2 = mpq(rng.randint(1, 50)), mpq(-rng.randint(1, 50))
    R = gcd(resultant_elim_y(f, P + Q * t1), resultant_elim_y(f, P + Q * t2))
    groups, unresolved = [], []
    if not R.terms or R.is_constant():
        return groups, unresolved
    _, facs = factor_univariate(R, base)
    for m, _mult in facs:
        if m.degree() == 1:
            K, alpha = base, -m.coeff((0,))
        elif base == QQ:
            K = ExtensionField(tuple(m.coeff((k,)) for k in range(m.degree() + 1)), "a", check=False)
            alpha = K.gen
        else:
            unresolved.append(m)
            continue
        g = gcd_many(_uni_at(f, alpha, K), _uni_at(P, alpha, K), _uni_at(Q, alpha, K))
        if g.is_constant():
            continue
        try:
            _, yf = factor_univariate(g, K)
        except UnsupportedExtensionTower:
            unresolved.append(m)
            continue
        pts = [(alpha, -h.coeff((0,))) for h, _ in yf if h.degree() == 1]
        if len(pts) < len(yf):
            unresolved.append(m)
        if pts:
            groups.append((m, K, pts))
    return groups, unresolved


def _affine_polars(P, Q, f, q, field):
    x, y = Poly.var(0, 2, field), Poly.var(1, 2, field)
    lx = Poly.const(q[1], 2, field) - x * q[0]
    ly = Poly.const(q[2], 2, field) - y * q[0]
    return lx * P + ly * Q, lx * f.diff(0) + ly * f.diff(1)


def poincare_audit(F: ProjFoliation, S, sing_points=None, seed: int = 0, strict: bool = False,
                   dicritical: str = "raise", centers: int = AUDIT_CENTERS) -> PoincareLedger:
    """Audit ``d (deg F + 2 - d) = sum_r (i_r(Gamma_q, S) - i_r(Sigma_q, S))``.

    Parameters
    ----------
    sing_points : list, optional
        Extra singular points on ``S`` as homogeneous triples (coordinates
        may lie in one extension field), used when elimination cannot
        resolve them.
    strict : bool
        Raise :class:`IncompleteSingularLocus` when some point is missing.
    dicritical : {"raise", "record"}
        What to do with a dicritical point of ``F`` on ``S``. With
        ``"record"`` the polar difference is kept and the local excess is
        left undefined.

    Raises
    ------
    NotInvariant, DicriticalPointOnS, IncompleteSingularLocus,
    NoTransversalLineFound, GenericityFailure
    """
    S = S if isinstance(S, ProjCurve) else ProjCurve(S)
    if not is_invariant_proj(F, S):
        raise NotInvariant("the curve is not invariant by the foliation")
    rng = random.Random(seed)
    d, n = S.degree, F.degree
    field = unify_fields(F.field, S.equation.field)

    for _ in range(LINE_CANDIDATES):
        M = _random_matrix(rng)
        FM, SM = F.transform(M), S.transform(M).equation
        if _line_ok(FM, SM, d):
            break
    else:
        raise NoTransversalLineFound(f"no transversal line among {LINE_CANDIDATES} candidates")
    Minv = _inverse(M)
    P, Q = FM.affine()
    f = dehomogenize(SM)
    P, Q, f = P.to_field(field), Q.to_field(field), f.to_field(field)

    groups, unresolved = _locate(P, Q, f, field, rng)
    located = {(m.fmt(), i) for m, _K, pts in groups for i in range(len(pts))}
    for pt in sing_points or ():
        Y = [sum((Minv[i][j] * pt[j] for j in range(3)), mpq(0)) for i in range(3)]
        if not Y[0]:
            raise ValueError("supplied point lies on the chosen line at infinity")
        a, b = Y[1] / Y[0], Y[2] / Y[0]
        K = unify_fields(field, field_of(a), field_of(b))
        if any(p.to_field(K).subs([a, b]) for p in (P, Q, f)):
            raise ValueError(f"supplied point {pt} is not a singular point on the curve")
        m = _min_poly_of(a, K)
        if any(m == g[0] for g in groups):
            continue
        groups.append((m, K, [(a, b)]))
        unresolved = [u for u in unresolved if u != m]
    groups.sort(key=lambda g: (g[0].degree(), g[0].fmt()))

    # local analysis, once per point
    records = []
    for m, K, pts in groups:
        orbit = K.degree if K != field else 1
        for a, b in pts:
            Pr, Qr, fr = (_translate(p, a, b, K) for p in (P, Q, f))
            Fr = saturate(Pr, Qr)
            tree = reduce(Fr)
            rec = dict(m=m, K=K, a=a, b=b, orbit=orbit, Pr=Pr, Qr=Qr, fr=fr,
                       dicritical=tree.dicritical, delta=None, gc=None, full=None)
            if tree.dicritical:
                if dicritical == "raise":
                    raise DicriticalPointOnS(
                    f"dicritical singular point at ({_fmt(a)}, {_fmt(b)}) of the affine chart")
            else:
                rep = polar_excess(Fr, Curve(fr), rng, tree)
                rec.update(delta=rep.delta, gc=rep.generalized_curve, full=rep.full_separatrix_set)
            rec["gamma"], rec["sigma"] = [], []
            records.append(rec)

    # centres q
    used, evidence = [], []
    attempts = 0
    while len(used) < centers:
        attempts += 1
        if attempts > CENTER_ATTEMPTS:
            raise GenericityFailure(f"only {len(used)} generic centres in {CENTER_ATTEMPTS} draws")
        q = tuple(mpq(rng.randint(-9, 9)) for _ in range(3))
        if not any(q):
            continue
        G, Sg = _affine_polars(P, Q, f, q, field)
        if not G.terms or not Sg.terms or G.deg_in(1) < 1 or Sg.deg_in(1) < 1:
            continue
        RG, RS = resultant_elim_y(f, G), resultant_elim_y(f, Sg)
        if not RG.terms or not RS.terms:
            continue
        ig, isg = [], []
        ok = True
        for rec in records:
            K = rec["K"]
            Gr = _translate(G, rec["a"], rec["b"], K)
            Sr = _translate(Sg, rec["a"], rec["b"], K)
            a_ = intersection_multiplicity(Gr, rec["fr"], rng)
            b_ = intersection_multiplicity(Sr, rec["fr"], rng)
            if a_ is INFINITE or b_ is INFINITE:
                ok = False
                break
            if rec["delta"] is not None and a_ - b_ != rec["delta"]:
                ok = False
                break
            ig.append(a_)
            isg.append(b_)
        if not ok:
            continue
        # Bezout closure: every x-factor carries exactly the local numbers
        restG, restS = RG, RS
        for m, K, pts in groups:
            sg = sum(ig[i] for i, r in enumerate(records) if r["m"] is m)
            ss = sum(isg[i] for i, r in enumerate(records) if r["m"] is m)
            km_g, km_s = _multiplicity(RG, m), _multiplicity(RS, m)
            if (km_g, km_s) != (sg, ss):
                ok = False
                break
            restG, restS = _strip(restG, m, km_g), _strip(restS, m, km_s)
        if not ok:
            continue
        for u in unresolved:
            restG = _strip(restG, u, _multiplicity(restG, u))
            restS = _strip(restS, u, _multiplicity(restS, u))
        if RG.degree() != d * (n + 1) or RS.degree() != d * (d - 1) or not unresolved and not _proportional(restG, restS):
            continue
        for rec, a_, b_ in zip(records, ig, isg):
            rec["gamma"].append(a_)
            rec["sigma"].append(b_)
        used.append(q)
        evidence.append({"center": [str(v) for v in q], "gamma_total": RG.degree(),
                         "sigma_total": RS.degree(), "regular_part_degree": restG.degree()})

    slack = n + 2 - d
    points = []
    for rec in records:
        a, b = rec["a"], rec["b"]
        X = _normalize_point([M[i][0] + M[i][1] * a + M[i][2] * b for i in range(3)])
        diffs = {g - s for g, s in zip(rec["gamma"], rec["sigma"])}
        if len(diffs) != 1:
            raise GenericityFailure(f"polar differences vary with the centre: {sorted(diffs)}")
        points.append(PointRecord(
            tuple(_fmt(v) for v in X), (_fmt(a), _fmt(b)), rec["orbit"],
            rec["m"].fmt(("a",)) if rec["orbit"] > 1 else None,
            rec["gamma"], rec["sigma"], diffs.pop(), rec["delta"], rec["dicritical"],
            rec["gc"], rec["full"]))
    weighted = sum(p.orbit_size * p.difference for p in points)
    complete = not unresolved
    deficit = d * slack - weighted
    if strict and not complete:
        raise IncompleteSingularLocus(
            f"{len(unresolved)} group(s) of singular points need a second extension",
            deficit=deficit)
    nondic = all(not p.dicritical for p in points)
    eq11 = (sum(p.orbit_size * p.delta for p in points) == d * slack) if nondic else None
    log_crit = None
    if nondic and complete:
        good = all(p.generalized_curve and p.full_separatrix_set for p in points)
        log_crit = (slack == 0) == good
    L = [Minv[0][j] for j in range(3)]
    line = Poly({tuple(int(i == j) for i in range(3)): L[j] for j in range(3)}, 3, QQ).fmt(NAMES)
    totals = {
        "gamma": {"expected": d * (n + 1),
                  "at_singular": sum(p.orbit_size * p.gamma[0] for p in points)},
        "sigma": {"expected": d * (d - 1),
                  "at_singular": sum(p.orbit_size * p.sigma[0] for p in points)},
    }
    for key in ("gamma", "sigma"):
        totals[key]["regular"] = totals[key]["expected"] - totals[key]["at_singular"]
    return PoincareLedger(
        line, [[str(v) for v in row] for row in M], d, n, [[str(v) for v in q] for q in used],
        points, totals, slack, weighted, weighted == d * slack and complete, eq11,
        slack >= 0, log_crit, complete, deficit,
        {"seed": seed, "centers": evidence, "unresolved": [u.fmt() for u in unresolved]})


def _min_poly_of(a, K) -> Poly:
    """Minimal polynomial over Q of an element of a simple extension."""
    if not isinstance(a, AlgElem) or a.is_rational():
        v = a if not isinstance(a, AlgElem) else (a.c[0] if a.c else mpq(0))
        return Poly.from_univariate([-mpq(v), 1], QQ)
    from sympy import CRootOf, Poly as SPoly, Rational, Symbol, minimal_polynomial

    z = Symbol("z")
    q = lambda c: Rational(int(c.numerator), int(c.denominator))
    gen = CRootOf(SPoly([q(c) for c in reversed(K.minimal_poly)], z).as_expr(), 0)
    mp = SPoly(minimal_polynomial(sum(q(c) * gen ** i for i, c in enumerate(a.c)), z), z).monic()
    return Poly.from_univariate([mpq(str(c)) for c in reversed(mp.all_coeffs())], QQ)
