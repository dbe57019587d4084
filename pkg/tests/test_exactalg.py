"""Tests for exact scalars, polynomials, series and elimination."""
import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from polarfol.errors import TruncationInsufficient, UnsupportedExtensionTower, ZeroInput
from polarfol.exactalg import (
    QQ, ExtensionField, Poly, TruncSeries, UniSeries, factor_univariate, gcd, initial_form,
    is_squarefree, linear_change, order, resultant_elim_y, shear, squarefree_part,
    univariate_roots, x_, y_,
)

x, y = x_(), y_()


def test_rational_field_basics():
    assert QQ.coerce(3) == mpq(3)
    assert QQ.coerce("1/2") == mpq(1, 2)
    assert QQ.one + QQ.one == 2


def test_extension_arithmetic():
    K = ExtensionField((1, 0, 1), "i")
    i = K.gen
    assert i * i == -1
    assert (1 + i) * (1 - i) == 2
    assert (1 + i).inverse() * (1 + i) == 1
    assert i ** 4 == 1
    assert (3 + 2 * i) / (3 + 2 * i) == 1


def test_extension_rejects_reducible_and_mixing():
    with pytest.raises(ValueError):
        ExtensionField((-1, 0, 1))
    K = ExtensionField((-2, 0, 1), "s")
    L = ExtensionField((-3, 0, 1), "t")
    with pytest.raises(UnsupportedExtensionTower):
        K.gen + L.gen


def test_order_and_initial_form():
    p = y**2 - x**3 + x * y**4
    assert order(p) == 2
    assert initial_form(p) == y**2
    with pytest.raises(ZeroInput):
        order(Poly.zero())


def test_poly_arithmetic_and_division():
    p = (x + y) ** 3
    assert p.coeff((2, 1)) == 3
    assert p.divexact(x + y) == (x + y) ** 2
    assert p.divexact(x - y) is None
    assert (x * y).diff(0) == y
    assert p.subs([y, x]) == p
    assert (x**2 * y).swap() == x * y**2


def test_uniseries_precision():
    t = UniSeries.t()
    s = UniSeries([0, 1, 2, 3], prec=4)
    prod = s * s
    assert prod.prec == 5
    assert prod.coefficient(2) == 1
    assert prod.coefficient(4) == 10
    with pytest.raises(TruncationInsufficient):
        prod.coefficient(5)
    z = UniSeries([0, 0], prec=3)
    with pytest.raises(TruncationInsufficient):
        z.valuation()
    with pytest.raises(ZeroInput):
        UniSeries([]).valuation()
    assert (t**3).valuation() == 3


def test_uniseries_inverse_and_divide():
    u = UniSeries([1, 1], prec=6)
    inv = u.inverse()
    assert inv.c == [1, -1, 1, -1, 1, -1]
    t = UniSeries.t()
    q = (t**3 + t**4).divide(t**2)
    assert q.c == [0, 1, 1]


def test_truncseries_order():
    s = TruncSeries.from_poly(y**2 - x**3, 3)
    assert s.order() == 2
    assert (s * s).trunc_order == 5
    with pytest.raises(TruncationInsufficient):
        TruncSeries.from_poly(x**5, 3).order()


def test_resultant_examples():
    assert resultant_elim_y(y - x, y + x) == Poly.from_univariate([0, 2])
    assert resultant_elim_y(y, y - x**3) == Poly.from_univariate([0, 0, 0, -1])
    assert not resultant_elim_y((y - x) * (y + 1), (y - x) * (y - 2)).terms


def test_shear_inverse_and_linear_change():
    p = y**2 - x**3
    assert shear(shear(p, 3), -3) == p
    assert linear_change(p, 1, 0, 0, 1) == p
    assert linear_change(x, 0, 1, 1, 0) == y


def test_gcd_and_squarefree():
    g = gcd((x - y) * (x + y) ** 2, (x + y) * (x - 2 * y))
    assert g == x + y
    assert not is_squarefree((x - y) ** 2 * x)
    assert squarefree_part((x - y) ** 2 * x).divexact((x - y) * x).is_constant()


def test_factor_over_gaussian_field():
    K = ExtensionField((1, 0, 1), "i")
    p = Poly.from_univariate([1, 0, 1], K)
    _, facs = factor_univariate(p)
    assert [f.degree() for f, _ in facs] == [1, 1]
    roots, orbits = univariate_roots(Poly.from_univariate([1, 0, 1]))
    assert roots == [] and orbits[0][0].degree() == 2


small = st.integers(min_value=-4, max_value=4)


def _poly(coeffs):
    return Poly({(i, j): c for (i, j), c in coeffs.items()}, 2)


poly_st = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), small, max_size=5).map(_poly)


@settings(max_examples=40, deadline=None)
@given(poly_st, poly_st, poly_st)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly.zero()


@settings(max_examples=25, deadline=None)
@given(poly_st, st.integers(-5, 5))
def test_shear_roundtrip(p, c):
    assert shear(shear(p, c), -c) == p


@settings(max_examples=20, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 3))
def test_resultant_vanishes_on_common_factor(a, b, k):
    h = y - x * a - b
    f = h * (y**k + x)
    g = h * (y - 7)
    assert not resultant_elim_y(f, g).terms


def test_linear_change_of_constant_is_poly():
    one = Poly.const(1)
    assert isinstance(shear(one, 3), Poly) and shear(one, 3) == one
