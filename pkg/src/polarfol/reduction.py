"""Reduction of singularities of a foliation germ by point blow-ups.

The tree always blows up the origin and afterwards only points that are not
simple. At every point the local divisor is ``{x = 0}`` (the newest
component) possibly together with ``{y = 0}`` (an older one), so simple
points are read from the linear part with ``lambda = Q_x(0)`` and
``mu = -P_y(0)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from gmpy2 import mpq

from .blowup import (
    NearPoint, blowup_foliation, chart_map_series, localize, singular_points_on_exceptional,
)
from .curves import BranchParam, DEFAULT_TRUNC, MAX_TRUNC
from .errors import (
    BlowupCapExceeded, Dicritical, NotInNormalPosition, TruncationInsufficient,
)
from .exactalg import AlgElem, ExtensionField, Poly, UniSeries, factor_univariate
from .foliation import LocalFoliation, milnor_number

__all__ = [
    "SimpleClass", "classify_simple", "ReductionNode", "ReductionTree", "reduce",
    "is_dicritical", "separatrices", "Separatrix", "is_second_type", "is_generalized_curve",
    "separatrix_curve_invariants", "locate_branch",
    "DEFAULT_BLOWUP_CAP", "DEFAULT_JET_ORDER",
]

DEFAULT_BLOWUP_CAP = 64
DEFAULT_JET_ORDER = 24

TRACE_TAGS = ("ch-trace", "sn-trace-well", "sn-trace-bad")
SN_TAGS = ("sn-trace-well", "sn-trace-bad", "sn-corner-bad", "sn-free")


@dataclass
class SimpleClass:
    """Classification of a point relative to the local divisor.

    ``lam`` and ``mu`` follow the normal forms: at a trace point the
    eigenvalue of the dual vector field transverse to the divisor is
    ``-lam`` and the one along it is ``-mu``. Without a divisor they are the
    two eigenvalues (when they lie in the field).
    """

    tag: str
    lam: object = None
    mu: object = None
    sn_order: Optional[int] = None

    @property
    def simple(self) -> bool:
        return self.tag != "not-simple"

    @property
    def is_saddle_node(self) -> bool:
        return self.tag in SN_TAGS

    @property
    def ratio(self):
        if self.lam is None or self.mu is None or not self.mu:
            return None
        return self.lam / self.mu

    def to_json(self):
        def s(v):
            if v is None:
                return None
            return v._fmt() if isinstance(v, AlgElem) else str(v)

        return {"tag": self.tag, "lambda": s(self.lam), "mu": s(self.mu),
                "sn_order": self.sn_order}


def _positive_rational(r) -> bool:
    if isinstance(r, AlgElem):
        if not r.is_rational():
            return False
        r = r.c[0] if r.c else mpq(0)
    return r > 0


def _linear(p: Poly, e):
    return p.coeff(e)


def classify_simple(F: LocalFoliation, axes=()) -> SimpleClass:
    """Classify ``F`` at the origin with divisor ``{x=0}`` and/or ``{y=0}``.

    Parameters
    ----------
    axes : collection of ``"x"``, ``"y"``
        Coordinate axes contained in the divisor; ``"x"`` means ``{x = 0}``.
    """
    axes = set(axes)
    P, Q = F.P, F.Q
    if "x" in axes and (Q.terms and Q.ord_in(0) == 0):
        raise NotInNormalPosition("divisor component {x=0} is not invariant")
    if "y" in axes and (P.terms and P.ord_in(1) == 0):
        raise NotInNormalPosition("divisor component {y=0} is not invariant")
    if not F.is_singular():
        if len(axes) == 2:
            return SimpleClass("nonsingular-corner")
        if axes:
            return SimpleClass("nonsingular-trace")
        return SimpleClass("nonsingular-free")
    if axes == {"y"}:
        # swap so that the divisor is {x=0}
        return classify_simple(LocalFoliation(Q.swap(), P.swap()), ("x",))
    if not axes:
        return _classify_free(F)
    lam = _linear(Q, (1, 0))
    mu = -_linear(P, (0, 1))
    if len(axes) == 2:
        if lam and mu:
            if _positive_rational(lam / mu):
                return SimpleClass("not-simple", lam, mu)
            return SimpleClass("ch-corner", lam, mu)
        if lam or mu:
            return SimpleClass("sn-corner-bad", lam, mu, _sn_order(F))
        return SimpleClass("not-simple", lam, mu)
    if lam and mu:
        if _positive_rational(lam / mu):
            return SimpleClass("not-simple", lam, mu)
        return SimpleClass("ch-trace", lam, mu)
    if mu:
        return SimpleClass("sn-trace-well", lam, mu, _sn_order(F))
    if lam:
        return SimpleClass("sn-trace-bad", lam, mu, _sn_order(F))
    return SimpleClass("not-simple", lam, mu)


def _sn_order(F: LocalFoliation) -> int:
    return milnor_number(F) - 1


def _classify_free(F: LocalFoliation) -> SimpleClass:
    """Eigenvalues of the linear part of ``v = -Q d/dx + P d/dy``."""
    P, Q = F.P, F.Q
    a, b = -_linear(Q, (1, 0)), -_linear(Q, (0, 1))
    c, d = _linear(P, (1, 0)), _linear(P, (0, 1))
    tr, det = a + d, a * d - b * c
    field = F.field
    if not det:
        if not tr:
            return SimpleClass("not-simple")
        return SimpleClass("sn-free", field.zero, tr, _sn_order(F))
    char = Poly.from_univariate([det, -tr, 1], field)
    _, facs = factor_univariate(char, field)
    if len(facs) == 1 and facs[0][0].degree() == 2:
        # conjugate eigenvalues: their ratio is rational only when it is -1
        return SimpleClass("ch-free")
    roots = []
    for fac, m in facs:
        roots += [-fac.coeff((0,))] * m
    e1, e2 = roots
    if _positive_rational(e1 / e2):
        return SimpleClass("not-simple", e1, e2)
    return SimpleClass("ch-free", e1, e2)


# ---------------------------------------------------------------------------
# the tree
# ---------------------------------------------------------------------------

@dataclass
class ReductionNode:
    """A point of some level of the reduction.

    ``divisor`` maps ``"x"``/``"y"`` to the ids of the exceptional
    components through the point (``{x=0}`` and ``{y=0}`` locally).
    ``weight`` is the number of conjugate copies of the point.
    """

    id: int
    germ: LocalFoliation
    divisor: dict
    point: Optional[NearPoint] = None
    parent: Optional[int] = None
    depth: int = 0
    weight: int = 1
    cls: Optional[SimpleClass] = None
    children: list = dc_field(default_factory=list)
    component: Optional[int] = None
    dicritical: bool = False

    @property
    def blown_up(self) -> bool:
        return self.component is not None

    @property
    def is_leaf(self) -> bool:
        return not self.blown_up

    @property
    def is_corner(self) -> bool:
        return len(self.divisor) == 2

    def label(self) -> str:
        return "origin" if self.point is None else self.point.label()


@dataclass
class ReductionTree:
    nodes: list
    components: dict
    blowup_count: int
    cap: int

    @property
    def root(self) -> ReductionNode:
        return self.nodes[0]

    def leaves(self):
        return [n for n in self.nodes if n.is_leaf and n.id != 0]

    def trace_leaves(self):
        return [n for n in self.leaves() if n.cls.tag in TRACE_TAGS]

    @property
    def dicritical(self) -> bool:
        return any(self.components.values())

    def path(self, node: ReductionNode):
        out = []
        while node.parent is not None:
            out.append(node)
            node = self.nodes[node.parent]
        return out

    def to_dot(self) -> str:
        """Deterministic DOT rendering."""
        lines = ["digraph reduction {", "  node [shape=ellipse];"]
        for n in self.nodes:
            tag = "blown-up" if n.blown_up else (n.cls.tag if n.cls else "")
            lab = f"{n.label()}\\n{tag}"
            if n.weight > 1:
                lab += f"\\nx{n.weight}"
            lines.append(f'  n{n.id} [label="{lab}"];')
        for n in self.nodes:
            if n.parent is not None:
                comp = self.nodes[n.parent].component
                lines.append(f'  n{n.parent} -> n{n.id} [label="E{comp}"];')
            if n.dicritical:
                lines.append(f'  d{n.component} [shape=box,label="E{n.component}\\ndicritical"];')
                lines.append(f'  n{n.id} -> d{n.component} [style=dashed,label="dicritical"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self):
        out = []
        for n in self.nodes:
            out.append({
                "id": n.id, "parent": n.parent, "point": n.label(), "weight": n.weight,
                "divisor": {k: v for k, v in sorted(n.divisor.items())},
                "class": n.cls.to_json() if n.cls else None,
                "component": n.component, "dicritical": n.dicritical,
            })
        return {"blowups": self.blowup_count, "dicritical": self.dicritical, "nodes": out}


def reduce(F: LocalFoliation, cap: int = DEFAULT_BLOWUP_CAP) -> ReductionTree:
    """Build a reduction tree of ``F``.

    Raises
    ------
    BlowupCapExceeded
        With the partial tree attached.
    """
    root = ReductionNode(0, F, {})
    root.cls = classify_simple(F, ())
    nodes = [root]
    components = {}
    tree = ReductionTree(nodes, components, 0, cap)
    queue = [root]
    while queue:
        node = queue.pop(0)
        if tree.blowup_count >= cap:
            raise BlowupCapExceeded(f"more than {cap} blow-ups needed", tree=tree)
        tree.blowup_count += 1
        cid = len(components) + 1
        node.component = cid
        res = blowup_foliation(node.germ)
        components[cid] = res.dicritical
        if res.dicritical:
            node.dicritical = True
            continue
        for p in singular_points_on_exceptional(res):
            div = {"x": cid}
            if p.old_axis == "y" and "y" in node.divisor:
                div["y"] = node.divisor["y"]
            elif p.old_axis == "x" and "x" in node.divisor:
                div["y"] = node.divisor["x"]
            child = ReductionNode(len(nodes), localize(res, p), div, p, node.id,
                                  node.depth + 1, node.weight * p.orbit_size)
            child.cls = classify_simple(child.germ, tuple(div))
            nodes.append(child)
            node.children.append(child.id)
            if not child.cls.simple:
                queue.append(child)
    return tree


def is_dicritical(F, cap: int = DEFAULT_BLOWUP_CAP) -> bool:
    tree = F if isinstance(F, ReductionTree) else reduce(F, cap)
    return tree.dicritical


def _tree(F, cap=DEFAULT_BLOWUP_CAP) -> ReductionTree:
    tree = F if isinstance(F, ReductionTree) else reduce(F, cap)
    if tree.dicritical:
        raise Dicritical("the foliation is dicritical", partial=tree)
    return tree


def is_second_type(F, cap: int = DEFAULT_BLOWUP_CAP) -> bool:
    """No badly oriented saddle-node in the reduction."""
    tree = _tree(F, cap)
    return not any(n.cls.tag in ("sn-trace-bad", "sn-corner-bad") for n in tree.leaves())


def is_generalized_curve(F, cap: int = DEFAULT_BLOWUP_CAP) -> bool:
    """No saddle-node at all in the reduction."""
    tree = _tree(F, cap)
    return not any(n.cls.is_saddle_node for n in tree.leaves())


# ---------------------------------------------------------------------------
# separatrices
# ---------------------------------------------------------------------------

@dataclass
class Separatrix:
    """A separatrix with its reduction data."""

    branch: BranchParam
    leaf: int
    strong: bool
    tag: str
    weight: int
    path_mults: list = dc_field(default_factory=list, repr=False)

    def to_json(self):
        return {"x": self.branch.x.fmt(), "y": self.branch.y.fmt(), "leaf": self.leaf,
                "strong": self.strong, "tag": self.tag, "orbit_size": self.weight}


def _leaf_jet(G: LocalFoliation, lam, mu, n: int) -> UniSeries:
    """Invariant curve ``y = phi(x)`` transverse to ``{x = 0}`` at a trace point."""
    field = G.field
    t = UniSeries.t(field)
    coeffs = [field.zero]
    for k in range(1, n):
        phi = UniSeries._raw(list(coeffs), None, field).with_prec(k + 1)
        tt = t.with_prec(k + 1)
        r = _as_series(G.P.subs([tt, phi]), field, k + 1) + \
            _as_series(G.Q.subs([tt, phi]), field, k + 1) * phi.derivative()
        rhs = r.coefficient(k)
        den = lam * k - mu
        coeffs.append(-rhs / den)
    return UniSeries._raw(coeffs, n, field)


def _as_series(v, field, prec):
    if isinstance(v, UniSeries):
        return v
    return UniSeries.const(v, field).with_prec(prec)


def _exact_if_polynomial(G: LocalFoliation, phi: UniSeries) -> UniSeries:
    """Return ``phi`` as an exact series when its polynomial part is invariant."""
    n = phi.prec
    if len(phi.c) * 2 > n:
        return phi
    field = G.field
    poly = UniSeries._raw(list(phi.c), None, field)
    t = UniSeries.t(field)
    r = G.P.subs([t, poly])
    r = _as_series(r, field, None) if not isinstance(r, UniSeries) else r
    q = G.Q.subs([t, poly])
    q = _as_series(q, field, None) if not isinstance(q, UniSeries) else q
    total = r + q * poly.derivative()
    if total.is_exact_zero():
        return poly
    return phi


def _series_mult(X: UniSeries, Y: UniSeries) -> int:
    return min(s.valuation() for s in (X, Y) if not s.is_exact_zero())


def _blow_down(tree: ReductionTree, leaf: ReductionNode, X: UniSeries, Y: UniSeries):
    """Map a parametrization at ``leaf`` to the root coordinates.

    Also returns the multiplicity of the branch at every blown-up point met.
    """
    node = leaf
    mults = []
    while node.parent is not None:
        p = node.point
        c = None if p.chart == "y" else p.coord
        X, Y = chart_map_series(p.chart, c, X, Y)
        node = tree.nodes[node.parent]
        mults.append((node.id, _series_mult(X, Y)))
    return X, Y, mults


def _separatrix_at(tree, leaf, n):
    G = leaf.germ
    cls = leaf.cls
    phi = _exact_if_polynomial(G, _leaf_jet(G, cls.lam, cls.mu, n))
    t = UniSeries.t(G.field)
    x, y, mults = _blow_down(tree, leaf, t, phi)
    b = BranchParam(x, y, G.field, leaf.weight)
    b.trunc = n
    b.refiner = lambda m, tree=tree, leaf=leaf: _separatrix_at(tree, leaf, m)[0]
    return b, mults


def separatrices(F, jet_order: int = DEFAULT_JET_ORDER, cap: int = DEFAULT_BLOWUP_CAP):
    """One separatrix per trace leaf, blown down to the original coordinates."""
    tree = _tree(F, cap)
    out = []
    for leaf in tree.trace_leaves():
        b, mults = _separatrix_at(tree, leaf, jet_order)
        strong = leaf.cls.tag in ("ch-trace", "sn-trace-bad")
        out.append(Separatrix(b, leaf.id, strong, leaf.cls.tag, leaf.weight, mults))
    return out


def separatrix_curve_invariants(F, seps=None):
    """``(nu, mu, r)`` of the separatrix curve read from the reduction tree.

    ``nu`` sums the branch multiplicities, ``r`` counts branches and the
    Milnor number follows from ``sum m_p (m_p - 1) - r + 1`` over the
    blown-up points ``p``, each counted with its number of conjugates.
    """
    tree = _tree(F)
    seps = seps if seps is not None else separatrices(tree)
    mult = {}
    for s in seps:
        for node_id, m in s.path_mults:
            # the conjugates of s are spread evenly over the conjugates of the point
            count = s.weight // tree.nodes[node_id].weight
            mult[node_id] = mult.get(node_id, 0) + m * count
    nu = sum(s.weight * s.branch.multiplicity() for s in seps)
    r = sum(s.weight for s in seps)
    mu = sum(tree.nodes[i].weight * m * (m - 1) for i, m in mult.items()) - r + 1
    return nu, mu, r


def _embed(value, emb):
    """Image of a node-field element under ``a -> emb``."""
    if emb is None or not isinstance(value, AlgElem):
        return value
    out = 0
    for i, c in enumerate(value.c):
        out = out + emb ** i * c
    return out


def locate_branch(F, b: BranchParam, cap: int = DEFAULT_BLOWUP_CAP) -> ReductionNode:
    """Leaf of the reduction tree reached by the strict transforms of ``b``.

    Irrational points are matched by evaluating their minimal polynomial at
    the branch coordinate; that root then fixes the embedding of the point
    field into the field of the branch for the deeper levels.
    """
    from .blowup import strict_transform_branch

    tree = _tree(F, cap)
    node = tree.root
    emb = None
    cur = b
    while node.blown_up:
        chart, c, nxt = strict_transform_branch(cur)
        found = None
        for cid in node.children:
            ch = tree.nodes[cid]
            p = ch.point
            if p.chart != chart:
                continue
            if chart == "y":
                found = ch
                break
            if p.orbit_poly is not None and emb is None:
                val = sum((c ** k * a for k, a in enumerate(p.orbit_poly)), 0 * c)
                if not val:
                    found, emb = ch, c
                    break
            elif _embed(p.coord, emb) == c:
                found = ch
                break
        if found is None:
            raise ValueError("branch does not follow the reduction tree")
        node, cur = found, nxt
    return node
