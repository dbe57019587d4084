"""Tests for blow-ups of foliations, curves and branches."""
import pytest

from corpus import corpus, saddle_node
from polarfol.blowup import (
    blowup_foliation, localize, localize_curve, points_on_exceptional_curve,
    polar_blowup_check, singular_points_on_exceptional, strict_transform_branch,
    strict_transform_curve,
)
from polarfol.curves import BranchParam, Curve, newton_puiseux
from polarfol.errors import NotSeparatrix
from polarfol.exactalg import UniSeries, x_, y_
from polarfol.foliation import alg_multiplicity, hamiltonian, saturate

x, y = x_(), y_()
T = UniSeries.t()
ZERO = UniSeries([])


def test_blowup_of_saddle_node():
    res = blowup_foliation(saddle_node(1))
    assert not res.dicritical and res.exponent == 1 and res.nu == 1
    pts = singular_points_on_exceptional(res)
    assert sorted(p.label() for p in pts) == ["u=0", "v=0"]


def test_radial_blowup_is_dicritical():
    res = blowup_foliation(saturate(y, -x))
    assert res.dicritical and res.exponent == 2
    G = res.x_chart
    assert not G.is_singular()


def test_cusp_curve_strict_transform():
    f = y**2 - x**3
    fx, fy = strict_transform_curve(f)
    assert fx == y**2 - x
    (p,) = points_on_exceptional_curve(f)
    assert p.label() == "v=0"
    assert localize_curve(f, p) == y**2 - x


def test_cusp_foliation_localization():
    res = blowup_foliation(hamiltonian(y**2 - x**3))
    (p,) = [q for q in singular_points_on_exceptional(res) if q.chart == "x"]
    G = localize(res, p)
    assert alg_multiplicity(G) == 1


def test_strict_transform_of_cusp_branch():
    (b,) = newton_puiseux(Curve(y**2 - x**3))
    chart, c, nb = strict_transform_branch(b)
    assert chart == "x" and c == 0
    assert nb.multiplicity() == 1


def test_cusp_instance():
    f = y**2 - x**3
    (b,) = newton_puiseux(Curve(f))
    chk = polar_blowup_check(hamiltonian(f), b)
    assert (chk.upstairs, chk.p0, chk.nu_strict, chk.nu_F, chk.nu_B) == (2, 3, 1, 1, 2)
    assert chk.rhs == 2 and chk.holds


def test_dicritical_instance_uses_shifted_exponent():
    chk = polar_blowup_check(saturate(y, -x), BranchParam(T, T, source=y - x))
    assert chk.dicritical and chk.holds


def test_requires_separatrix():
    with pytest.raises(NotSeparatrix):
        polar_blowup_check(saddle_node(1), BranchParam(T, T, source=y - x))


def _pairs():
    for name, F, f in corpus():
        if f is not None:
            for b in newton_puiseux(Curve(f)):
                yield name, F, b
    for k in range(1, 5):
        yield f"sn{k}", saddle_node(k), BranchParam(ZERO, T, source=x)
        yield f"sn{k}", saddle_node(k), BranchParam(T, ZERO, source=y)
    ch = saturate(y, 2 * x)
    yield "ch", ch, BranchParam(ZERO, T, source=x)
    yield "ch", ch, BranchParam(T, ZERO, source=y)


def test_polar_blowup_formula_on_corpus():
    """p(F~, B~) = p0(F, B) + nu(B~) - e nu0(B) on every (germ, separatrix) pair."""
    n = 0
    for name, F, b in _pairs():
        chk = polar_blowup_check(F, b)
        assert chk.holds, (name, b, chk)
        n += 1
    assert n >= 30
