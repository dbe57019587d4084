"""Tests for the polar excess, the union law and per-branch comparison."""
import itertools
import random

import pytest

from corpus import TANGENT_SADDLE_NODES, corpus, extended_corpus, saddle_node
from polarfol.curves import BranchParam, Curve, newton_puiseux
from polarfol.errors import Dicritical, NotInvariant
from polarfol.exactalg import UniSeries, factor_poly, x_, y_
from polarfol.foliation import alg_multiplicity, hamiltonian, milnor_number, saturate
from polarfol.gsv import (
    branch_comparison, excess_from_reduction, gsv_index, polar_excess, union_law_check,
)
from polarfol.reduction import reduce

x, y = x_(), y_()
T = UniSeries.t()
ZERO = UniSeries([])


def test_cusp_generalized_curve():
    f = y**2 - x**3
    rep = polar_excess(hamiltonian(f), Curve(f))
    assert (rep.p0_F, rep.p0_G, rep.delta) == (3, 3, 0)
    assert rep.generalized_curve and rep.full_separatrix_set
    assert rep.p0_G_direct == rep.p0_G == rep.mu_C + rep.nu_C - 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_saddle_node_excess(k):
    F = saddle_node(k)
    rep = polar_excess(F, Curve(x * y))
    assert rep.p0_F == k + 2 == milnor_number(F) + alg_multiplicity(F)
    assert rep.delta == k == gsv_index(F, Curve(x * y))
    assert rep.second_type and not rep.generalized_curve
    rec = union_law_check(F, Curve(x), Curve(y))
    assert rec.holds and rec.delta_union == k and rec.i12 == 1


def test_hamiltonian_of_axes():
    F = hamiltonian(x * y)
    assert polar_excess(F, Curve(x)).delta == 1
    rec = union_law_check(F, Curve(x), Curve(y))
    assert (rec.delta_union, rec.delta_1, rec.delta_2, rec.rhs) == (0, 1, 1, 0)


def test_errors():
    with pytest.raises(Dicritical):
        polar_excess(saturate(y, -x), Curve(y))
    with pytest.raises(NotInvariant):
        polar_excess(saddle_node(1), Curve(y - x))


def test_branch_comparison_examples():
    f = y**2 - x**3
    (b,) = newton_puiseux(Curve(f))
    pf, pg, flags = branch_comparison(hamiltonian(f), b, Curve(f))
    assert pf == pg and flags == {"equal": True, "briot_bouquet": True}
    F = saddle_node(2)
    strong = BranchParam(ZERO, T, source=x)
    weak = BranchParam(T, ZERO, source=y)
    pf, pg, flags = branch_comparison(F, strong, Curve(x * y))
    assert pf == pg and flags["briot_bouquet"]
    pf, pg, flags = branch_comparison(F, weak, Curve(x * y))
    assert pf > pg and not flags["equal"] and not flags["briot_bouquet"]
    for bb in (BranchParam(ZERO, T, source=x), BranchParam(T, ZERO, source=y)):
        pf, pg, flags = branch_comparison(hamiltonian(x * y), bb, Curve(x * y))
        assert flags["equal"]


def _components(name, f):
    """Invariant curves whose union is S_F, when equations are known."""
    if f is not None:
        return [g for g, _ in factor_poly(f)]
    if name.startswith("sn") or name in ("ch0", "ch1", "ch2"):
        return [x, y]
    return None


def _subcurves(parts):
    for r in range(1, len(parts) + 1):
        for sub in itertools.combinations(parts, r):
            c = sub[0]
            for g in sub[1:]:
                c = c * g
            yield sub, c


def test_positivity_over_invariant_subcurves():
    rng = random.Random(3)
    n = 0
    for name, F, f in corpus():
        parts = _components(name, f)
        if parts is None:
            continue
        tree = reduce(F)
        for sub, c in _subcurves(parts):
            rep = polar_excess(F, Curve(c), rng, tree)
            assert rep.delta >= 0, (name, c)
            n += 1
    assert n >= 30


def test_union_law_on_two_part_splits():
    rng = random.Random(4)
    n = 0
    for name, F, f in corpus():
        parts = _components(name, f)
        if parts is None or len(parts) < 2:
            continue
        tree = reduce(F)
        idx = range(len(parts))
        for r in range(1, len(parts) // 2 + 1):
            for left in itertools.combinations(idx, r):
                right = [i for i in idx if i not in left]
                c1, c2 = x**0, x**0
                for i in left:
                    c1 = c1 * parts[i]
                for i in right:
                    c2 = c2 * parts[i]
                rec = union_law_check(F, Curve(c1), Curve(c2), rng, tree)
                assert rec.holds, (name, rec)
                n += 1
    assert n >= 10


def test_excess_of_full_separatrix_set():
    """Delta(F, S_F) >= 0, zero iff generalized curve; p0 = mu + nu iff second type."""
    for name, F, f in extended_corpus():
        exc = excess_from_reduction(F)
        assert exc.delta >= 0, name
        assert (exc.delta == 0) == exc.generalized_curve, name
        mu, nu = milnor_number(F), alg_multiplicity(F)
        assert exc.p0_F <= mu + nu, name
        assert (exc.p0_F == mu + nu) == exc.second_type, name
        if exc.second_type:
            assert exc.p0_F - exc.p0_G == mu - exc.mu_C, name
        if f is not None:
            direct = polar_excess(F, Curve(f))
            assert (direct.p0_F, direct.delta) == (exc.p0_F, exc.delta), name


def test_briot_bouquet_clause_for_second_type():
    for name, F, f in corpus():
        parts = _components(name, f)
        if parts is None:
            continue
        s = x**0
        for g in parts:
            s = s * g
        rep = polar_excess(F, Curve(s))
        if rep.second_type:
            for rec in rep.per_branch:
                assert rec.p0_G <= rec.p0_F, name
                assert rec.equal == rec.briot_bouquet, name


def test_tangent_saddle_nodes_have_positive_excess():
    for F in TANGENT_SADDLE_NODES:
        exc = excess_from_reduction(F)
        assert exc.delta == 2 and not exc.second_type
