"""Tests for local foliation invariants."""
import random

import pytest

from corpus import TANGENT_SADDLE_NODES, extended_corpus, saddle_node
from oracles import staircase_i0
from polarfol.blowup import blowup_foliation, localize_at, strict_transform_branch
from polarfol.curves import BranchParam, Curve, branch_pullback_order, newton_puiseux
from polarfol.errors import DegeneratePolar, IsSeparatrix, NotSeparatrix
from polarfol.exactalg import Poly, UniSeries, x_, y_
from polarfol.foliation import (
    _pullback_form, alg_multiplicity, hamiltonian, is_invariant, milnor_along, milnor_number,
    polar_curve, polar_intersection, polar_intersection_branch, saturate, tangency_order,
)
from polarfol.reduction import is_second_type, separatrices

x, y = x_(), y_()
T = UniSeries.t()
ZERO = UniSeries([])


def _branch(xs, ys, source):
    return BranchParam(xs, ys, source=source)


def test_saturate_examples():
    F = saturate(x * y, x * x**2)
    assert (F.P, F.Q) == (y, x**2)
    assert F.discarded.divexact(x) is not None
    G = saturate(y, -x**3)
    assert (G.P, G.Q) == (y, -x**3)
    H = saturate(2 * y, 4 * y)
    assert not H.is_singular()
    assert H.Q == 2 * H.P


def test_orientation_of_vector_field():
    F = saturate(y, -x**3)
    vx, vy = F.vector_field
    # v annihilates omega: P vx + Q vy = 0
    assert not (F.P * vx + F.Q * vy).terms
    assert (vx, vy) == (x**3, y)


def test_alg_multiplicity_examples():
    assert alg_multiplicity(saddle_node(2)) == 1
    assert alg_multiplicity(hamiltonian(y**2 - x**3)) == 1
    assert alg_multiplicity(saturate(y, x)) == 1


def test_milnor_number_examples():
    for k in range(1, 5):
        F = saddle_node(k)
        assert milnor_number(F) == k + 1 == staircase_i0(F.P, F.Q)
    assert milnor_number(saturate(y, -x)) == 1
    assert milnor_number(hamiltonian(y**2 - x**3)) == 2
    assert milnor_number(saturate(Poly.const(1), Poly.zero())) == 0


def test_hamiltonian_examples():
    H = hamiltonian(x * y)
    assert (H.P, H.Q) == (y, x)
    C = hamiltonian(y**2 - x**3)
    assert (C.P, C.Q) == (-3 * x**2, 2 * y)


def test_polar_curve_examples():
    radial = saturate(y, -x)
    for a, b in [(1, 0), (0, 1), (2, 3)]:
        assert polar_curve(radial, a, b).equation == a * y - b * x
    assert polar_curve(saturate(y, -x**3), 1, 0).equation == y
    f = y**2 - x**3
    assert polar_curve(hamiltonian(f), 2, 5).equation == 2 * f.diff(0) + 5 * f.diff(1)
    with pytest.raises(DegeneratePolar):
        polar_curve(saturate(y, y), 1, -1)
    with pytest.raises(ValueError):
        polar_curve(radial, 0, 0)


def test_is_invariant_examples():
    f = y**2 - x**3
    assert is_invariant(hamiltonian(f), f)
    assert is_invariant(saturate(y, -x**3), y)
    assert not is_invariant(saturate(Poly.const(1), Poly.zero()), y)


def test_tangency_examples():
    dx = saturate(Poly.const(1), Poly.zero())
    assert tangency_order(dx, _branch(T, T, y - x)) == 0
    assert tangency_order(hamiltonian(y**2 - x**3), _branch(T, ZERO, y)) == 2
    # pullback of y dx - x dy along (t, t^2) is -t^2 dt
    assert tangency_order(saturate(y, -x), _branch(T, T**2, y - x**2)) == 2
    with pytest.raises(IsSeparatrix):
        tangency_order(saddle_node(1), _branch(T, ZERO, y))


def test_milnor_along_examples():
    for k in range(1, 5):
        F = saddle_node(k)
        assert milnor_along(F, _branch(ZERO, T, x)) == 1
        assert milnor_along(F, _branch(T, ZERO, y)) == k + 1
    (b,) = newton_puiseux(Curve(y**2 - x**3))
    assert milnor_along(hamiltonian(y**2 - x**3), b) == 2
    with pytest.raises(NotSeparatrix):
        milnor_along(saddle_node(1), _branch(T, T, y - x))


def test_polar_intersection_examples():
    rng = random.Random(1)
    f = y**2 - x**3
    assert polar_intersection(hamiltonian(f), f, rng) == 3
    for k in range(1, 4):
        assert polar_intersection(saddle_node(k), x * y, rng) == k + 2
    assert polar_intersection(hamiltonian(x * y), x * y, rng) == 2
    ev = polar_intersection(hamiltonian(f), f, random.Random(7), evidence=True)
    assert ev.value == ev.exact == 3 and len(ev.slopes) == 5


def _invariant_branches(name, F, f):
    if f is not None:
        return [(b, True) for b in newton_puiseux(Curve(f))]
    return [(s.branch, False) for s in separatrices(F)]


def test_polar_identity_on_every_separatrix():
    """p0(F, B) = mu0(F, B) + nu0(B) - 1 on every separatrix of the corpus."""
    checked = 0
    for name, F, f in extended_corpus():
        for b, has_source in _invariant_branches(name, F, f):
            p = polar_intersection_branch(F, b)
            mu = milnor_along(F, b, check=has_source)
            assert p == mu + b.multiplicity() - 1, (name, b)
            checked += 1
    assert checked >= 50


def _test_branches(rng, n):
    out = []
    for _ in range(n):
        a, c = rng.randint(-4, 4), rng.randint(-3, 3)
        if rng.random() < 0.5:
            out.append(_branch(T, T * a + T**2 * c, y - x * a - x**2 * c))
        else:
            s = rng.choice([1, -1])
            out.append(_branch(T**2, T**3 * s + T**2 * a, (y - x * a) ** 2 - x**3))
    return out


def _non_invariant(F, rng, n):
    bs = []
    for b in _test_branches(rng, 3 * n):
        if not is_invariant(F, b.source) and b.evaluate(b.source).is_exact_zero():
            bs.append(b)
        if len(bs) == n:
            break
    return bs


def test_tangency_recursion_under_blowup():
    """tau0(F, B) = nu0(B) nu0(F) + tau(F', B') after one blow-up."""
    rng = random.Random(11)
    count = 0
    for name, F, _ in extended_corpus():
        res = blowup_foliation(F)
        if res.dicritical:
            continue
        for b in _non_invariant(F, rng, 3):
            tau = tangency_order(F, b)
            chart, c, nb = strict_transform_branch(b)
            G = localize_at(res, chart, c, F.field)
            up = _pullback_form(G, nb).valuation()
            assert tau == b.multiplicity() * alg_multiplicity(F) + up, name
            count += 1
    assert count >= 40


def _i_sep(seps, g):
    return sum(s.weight * branch_pullback_order(s.branch, g) for s in seps)


def test_tangency_bound_and_second_type():
    """i0(S_F, B) <= tau0(F, B) + 1, with equality exactly for second type germs."""
    rng = random.Random(5)
    strict = 0
    for name, F, _ in extended_corpus():
        seps = separatrices(F)
        st = is_second_type(F)
        for b in _non_invariant(F, rng, 3):
            i = _i_sep(seps, b.source)
            tau = tangency_order(F, b)
            assert i <= tau + 1, name
            assert (i == tau + 1) == st, name
            strict += not st
    assert strict >= 3


def test_tangency_bound_is_strict_for_tangent_saddle_nodes():
    for F in TANGENT_SADDLE_NODES:
        assert not is_second_type(F)
        b = _branch(T, T * 5, y - x * 5)
        assert _i_sep(separatrices(F), b.source) < tangency_order(F, b) + 1
