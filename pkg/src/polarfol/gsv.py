"""Polar excess of a foliation along an invariant curve.

``Delta_0(F, C) = p_0(F, C) - p_0(G_f, C)`` where ``G_f`` is the hamiltonian
foliation of a reduced equation of ``C``. The polar intersection of ``G_f``
is known in closed form, ``mu_0(C) + nu_0(C) - 1``; both that value and the
direct polar computation are evaluated and must agree. The excess is the
GSV index of ``F`` along ``C``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .curves import Curve, curve_milnor, curve_multiplicity, intersection_multiplicity, newton_puiseux
from .errors import Dicritical, NotInvariant
from .foliation import (
    LocalFoliation, hamiltonian, is_invariant, polar_intersection, polar_intersection_branch,
)
from .reduction import (
    ReductionTree, is_generalized_curve, is_second_type, locate_branch, reduce,
    separatrices, separatrix_curve_invariants, DEFAULT_BLOWUP_CAP,
)

__all__ = [
    "ExcessReport", "BranchRecord", "polar_excess", "gsv_index", "union_law_check",
    "UnionRecord", "branch_comparison", "excess_from_reduction",
]


@dataclass
class BranchRecord:
    index: int
    p0_F: int
    p0_G: int
    equal: bool
    briot_bouquet: Optional[bool]
    orbit_size: int = 1

    def to_json(self):
        return dict(self.__dict__)


@dataclass
class ExcessReport:
    """Polar excess of ``F`` along ``C`` with its ingredients."""

    p0_F: int
    p0_G: int
    delta: int
    second_type: bool
    generalized_curve: bool
    per_branch: list = dc_field(default_factory=list)
    mu_C: Optional[int] = None
    nu_C: Optional[int] = None
    p0_G_direct: Optional[int] = None
    full_separatrix_set: Optional[bool] = None

    @property
    def gsv(self) -> int:
        return self.delta

    def to_json(self):
        d = {k: v for k, v in self.__dict__.items() if k != "per_branch"}
        d["per_branch"] = [b.to_json() for b in self.per_branch]
        return d


def _tree_of(F, tree, cap):
    tree = tree if tree is not None else reduce(F, cap)
    if tree.dicritical:
        raise Dicritical("polar excess needs a non-dicritical foliation", partial=tree)
    return tree


def polar_excess(F: LocalFoliation, c: Curve, rng=None, tree: Optional[ReductionTree] = None,
                 cap: int = DEFAULT_BLOWUP_CAP, branches=None) -> ExcessReport:
    """``Delta_0(F, C)`` for an invariant curve ``C``.

    Raises
    ------
    Dicritical
        When the reduction of ``F`` has a dicritical component.
    NotInvariant
        When ``C`` is not invariant by ``F``.
    """
    rng = rng or random.Random(0)
    tree = _tree_of(F, tree, cap)
    if not is_invariant(F, c):
        raise NotInvariant("curve is not invariant by the foliation")
    branches = branches if branches is not None else newton_puiseux(c)
    G = hamiltonian(c.equation)
    p0F = polar_intersection(F, c, rng, branches=branches)
    mu, nu = curve_milnor(c, rng), curve_multiplicity(c)
    closed = mu + nu - 1
    direct = polar_intersection(G, c, rng, branches=branches)
    if closed != direct:
        raise ArithmeticError(f"hamiltonian polar {direct} differs from mu + nu - 1 = {closed}")
    leaves = set()
    per = []
    for k, b in enumerate(branches):
        pf = polar_intersection_branch(F, b)
        pg = polar_intersection_branch(G, b)
        leaf = locate_branch(tree, b)
        leaves.add(leaf.id)
        bb = leaf.cls.tag in ("ch-trace", "sn-trace-bad")
        per.append(BranchRecord(k, pf, pg, pf == pg, bb, b.orbit_size))
    full = leaves == {n.id for n in tree.trace_leaves()}
    return ExcessReport(p0F, closed, p0F - closed, is_second_type(tree),
                        is_generalized_curve(tree), per, mu, nu, direct, full)


def gsv_index(F: LocalFoliation, c: Curve, rng=None) -> int:
    """GSV index of ``F`` along ``C``, computed as the polar excess."""
    return polar_excess(F, c, rng).delta


@dataclass
class UnionRecord:
    delta_union: int
    delta_1: int
    delta_2: int
    i12: int
    rhs: int
    holds: bool


def union_law_check(F: LocalFoliation, c1: Curve, c2: Curve, rng=None, tree=None) -> UnionRecord:
    """Compare ``Delta(C1 u C2)`` with ``Delta(C1) + Delta(C2) - 2 i_0(C1, C2)``."""
    tree = _tree_of(F, tree, DEFAULT_BLOWUP_CAP)
    d = polar_excess(F, c1 * c2, rng, tree).delta
    d1 = polar_excess(F, c1, rng, tree).delta
    d2 = polar_excess(F, c2, rng, tree).delta
    i12 = intersection_multiplicity(c1, c2, rng)
    rhs = d1 + d2 - 2 * i12
    return UnionRecord(d, d1, d2, i12, rhs, d == rhs)


def branch_comparison(F: LocalFoliation, b, s_f: Curve, tree=None):
    """Per-branch polar numbers of ``F`` and of the hamiltonian of ``S_F``.

    Returns
    -------
    (p0_F, p0_G, flags)
        ``flags`` holds ``equal`` and ``briot_bouquet``.
    """
    tree = _tree_of(F, tree, DEFAULT_BLOWUP_CAP)
    G = hamiltonian(s_f.equation)
    pf = polar_intersection_branch(F, b)
    pg = polar_intersection_branch(G, b)
    leaf = locate_branch(tree, b)
    return pf, pg, {"equal": pf == pg,
                    "briot_bouquet": leaf.cls.tag in ("ch-trace", "sn-trace-bad")}


def excess_from_reduction(F: LocalFoliation, tree=None, jet_order=None) -> ExcessReport:
    """``Delta_0(F, S_F)`` when only the foliation is known.

    The separatrices come from the reduction tree; ``mu(S_F)`` and
    ``nu(S_F)`` are read from the multiplicities of their strict transforms.
    """
    tree = _tree_of(F, tree, DEFAULT_BLOWUP_CAP)
    seps = separatrices(tree) if jet_order is None else separatrices(tree, jet_order)
    nu, mu, _r = separatrix_curve_invariants(tree, seps)
    p0 = 0
    per = []
    for k, s in enumerate(seps):
        v = polar_intersection_branch(F, s.branch)
        p0 += s.weight * v
        per.append(BranchRecord(k, v, None, None, s.strong, s.weight))
    closed = mu + nu - 1
    return ExcessReport(p0, closed, p0 - closed, is_second_type(tree),
                        is_generalized_curve(tree), per, mu, nu, None, True)
