"""Tests for projective foliations and the Poincare audit."""
from pathlib import Path

import pytest

from polarfol.errors import (
    DegenerateRadial, DicriticalPointOnS, EulerViolation, NonHomogeneous, NotInvariant,
    ResidueSumNonzero,
)
from polarfol.exactalg import ExtensionField, Poly, x_, y_
from polarfol.parsing import parse_input
from polarfol.projective import (
    ProjCurve, dehomogenize, from_affine, from_homogeneous, global_polar, homogenize,
    is_invariant_proj, logarithmic, poincare_audit,
)

FIX = Path(__file__).parent / "fixtures"
X0, X1, X2 = (Poly.var(i, 3) for i in range(3))
x, y = x_(), y_()


def _load(name):
    lines = (FIX / name).read_text(encoding="utf-8").splitlines()
    r = parse_input(" ".join(ln.split("#", 1)[0] for ln in lines))
    if r.kind == "triple":
        return from_homogeneous(*r.value)
    if r.kind == "form":
        return from_affine(r.value)
    p = r.value
    return ProjCurve(p if p.nvars == 3 else homogenize(p))


def test_homogenize_roundtrip():
    p = y**2 - x**3 + x
    assert dehomogenize(homogenize(p)) == p
    assert homogenize(p).is_homogeneous() and homogenize(p).degree() == 3


def test_from_homogeneous_examples():
    F = from_homogeneous(X1 * X2, X0 * X2, -2 * X0 * X1)
    assert F.degree == 1
    dx = from_affine((Poly.const(1), Poly.zero()))
    assert dx.degree == 0
    with pytest.raises(EulerViolation):
        from_homogeneous(X0, Poly.zero(3), Poly.zero(3))
    with pytest.raises(NonHomogeneous):
        from_homogeneous(X1 + X2 * X2, X0, Poly.zero(3))


def test_saturation_of_common_factor():
    F = from_homogeneous(X0 * X1 * X2, X0 * X0 * X2, -2 * X0 * X0 * X1)
    assert F == from_homogeneous(X1 * X2, X0 * X2, -2 * X0 * X1)


def test_global_polar_examples():
    three = logarithmic([1, 1, -2], [X0, X1, X2])
    q = (3, 5, 7)
    G = global_polar(three, q)
    assert G.degree == three.degree + 1 == 2
    for corner in ([1, 0, 0], [0, 1, 0], [0, 0, 1]):
        assert not G.equation.subs(corner)
    pencil = logarithmic([1, -1], [X0, X1])
    assert global_polar(pencil, (1, 2, 5)).degree == 1
    with pytest.raises(DegenerateRadial):
        global_polar(pencil, (0, 0, 1))


def test_invariance_examples():
    three = logarithmic([1, 1, -2], [X0, X1, X2])
    assert is_invariant_proj(three, X0 * X1 * X2)
    assert not is_invariant_proj(three, X0 + 2 * X1 + 3 * X2)
    dx = from_affine((Poly.const(1), Poly.zero()))
    assert is_invariant_proj(dx, X1 - 4 * X0)


def test_logarithmic_examples():
    three = logarithmic([1, 1, -2], [X0, X1, X2])
    assert three == from_homogeneous(X1 * X2, X0 * X2, -2 * X0 * X1)
    assert logarithmic([1, -1], [X0, X1]).degree == 0
    with pytest.raises(ResidueSumNonzero):
        logarithmic([1, 1], [X0, X1])


def test_fixtures_match_constructors():
    assert _load("three_lines.fol") == logarithmic([1, 1, -2], [X0, X1, X2])
    assert _load("pencil.fol") == logarithmic([1, -1], [X0, X1])
    C = X1**2 - X0 * X2
    assert _load("conic_line.fol") == logarithmic([1, -2], [C, X0])
    K = ExtensionField((1, 1, 1), "w")
    w = K.gen
    assert _load("three_lines_w.fol") == logarithmic([1, w, w * w], [X0, X1, X2])


def _closes(led):
    for key in ("gamma", "sigma"):
        tot = led.bezout_totals[key]
        assert tot["at_singular"] + tot["regular"] == tot["expected"]
    d, n = led.degree_S, led.degree_F
    assert led.bezout_totals["gamma"]["expected"] == d * (n + 1)
    assert led.bezout_totals["sigma"]["expected"] == d * (d - 1)
    assert led.eq10_holds and led.complete and led.deficit == 0
    assert d * led.bound_slack == sum(p.orbit_size * p.difference for p in led.points)
    assert len(led.centers) == 3
    for p in led.points:
        assert len(set(g - s for g, s in zip(p.gamma, p.sigma))) == 1


def test_three_lines_audit():
    F, S = _load("three_lines.fol"), _load("three_lines.curve")
    led = poincare_audit(F, S, dicritical="record")
    _closes(led)
    assert led.bound_slack == 0 and led.degree_S == 3 and led.degree_F == 1
    assert len(led.points) == 3
    assert all(p.difference == 0 for p in led.points)
    assert all(p.delta == 0 for p in led.points if not p.dicritical)
    with pytest.raises(DicriticalPointOnS):
        poincare_audit(F, S)


def test_three_lines_with_nonreal_residues():
    led = poincare_audit(_load("three_lines_w.fol"), _load("three_lines.curve"))
    _closes(led)
    assert led.bound_slack == 0 and led.eq11_holds and led.logarithmic_criterion
    assert [p.delta for p in led.points] == [0, 0, 0]
    assert all(p.generalized_curve and p.full_separatrix_set for p in led.points)


def test_pencil_audit():
    led = poincare_audit(_load("pencil.fol"), _load("pencil.curve"), dicritical="record")
    _closes(led)
    assert led.bound_slack == 0 and led.degree_S == 2 and led.degree_F == 0
    assert [p.difference for p in led.points] == [0]


def test_conic_and_line_audit():
    led = poincare_audit(_load("conic_line.fol"), _load("conic_line.curve"), dicritical="record")
    _closes(led)
    assert led.bound_slack == 0


def test_saddle_node_on_line():
    F = _load("saddle_node_line.fol")
    led = poincare_audit(F, _load("saddle_node_line.curve"))
    _closes(led)
    assert led.bound_slack == 2 and led.eq11_holds
    assert [(p.difference, p.delta) for p in led.points] == [(2, 2)]
    led = poincare_audit(F, _load("saddle_node_axes.curve"))
    _closes(led)
    assert led.bound_slack == 1 and led.eq11_holds
    assert led.degree_S * led.bound_slack == sum(p.delta for p in led.points) == 2


def test_audit_is_seeded():
    F, S = _load("saddle_node_line.fol"), _load("saddle_node_axes.curve")
    a, b = poincare_audit(F, S, seed=5), poincare_audit(F, S, seed=5)
    assert a.to_json() == b.to_json()
    c = poincare_audit(F, S, seed=6)
    assert c.bound_slack == a.bound_slack and c.weighted_sum == a.weighted_sum


def test_audit_requires_invariance():
    with pytest.raises(NotInvariant):
        poincare_audit(_load("three_lines.fol"), ProjCurve(X0 + X1 + X2))
