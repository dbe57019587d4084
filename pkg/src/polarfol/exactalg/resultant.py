"""Resultants with respect to ``y`` and linear changes of coordinates.

Sign convention: ``resultant_elim_y(f, g)`` is the determinant of the
Sylvester matrix whose first ``deg_y g`` rows carry the coefficients of
``f`` (highest power of ``y`` first) and whose last ``deg_y f`` rows carry
those of ``g``. With this convention ``Res(y - x, y + x) = 2x`` and
``Res(y, y - x^3) = -x^3``.
"""
from __future__ import annotations

from .field import unify_fields
from .poly import Poly

__all__ = ["sylvester_matrix", "det", "resultant_elim_y", "shear", "linear_change"]


def det(m, field):
    """Determinant by Gaussian elimination over an exact field."""
    m = [list(r) for r in m]
    n = len(m)
    sign = 1
    d = field.one
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return field.zero
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        p = m[k][k]
        d = d * p
        inv = 1 / p
        for i in range(k + 1, n):
            if m[i][k]:
                f = m[i][k] * inv
                row_k = m[k]
                row_i = m[i]
                for j in range(k + 1, n):
                    if row_k[j]:
                        row_i[j] = row_i[j] - f * row_k[j]
    return d if sign > 0 else -d


def sylvester_matrix(a, b, zero):
    """Sylvester matrix of coefficient lists ``a`` and ``b`` (highest first)."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(a) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(b) + [zero] * (size - n - 1 - i))
    return rows


def _y_coeffs(p: Poly):
    """Coefficients in ``y`` as univariate polynomials in ``x``, highest first."""
    d = p.deg_in(1)
    cols = [dict() for _ in range(d + 1)]
    for (i, j), c in p.terms.items():
        cols[j][(i,)] = c
    return [Poly._raw(cols[j], 1, p.field) for j in range(d, -1, -1)]


def _eval_uni(p: Poly, x0, field):
    v = field.zero
    for (i,), c in p.terms.items():
        v = v + c * x0 ** i
    return v


def _interpolate(xs, ys, field):
    """Newton interpolation; returns a univariate Poly."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form, highest divided difference first
    result = [coef[-1]]
    for k in range(n - 2, -1, -1):
        # result = result * (x - xs[k]) + coef[k]
        new = [field.zero] * (len(result) + 1)
        for i, c in enumerate(result):
            new[i + 1] = new[i + 1] + c
            new[i] = new[i] - c * xs[k]
        new[0] = new[0] + coef[k]
        result = new
    return Poly.from_univariate(result, field)


def resultant_elim_y(f: Poly, g: Poly) -> Poly:
    """Resultant of ``f`` and ``g`` as polynomials in ``y``, a polynomial in ``x``.

    Both inputs must have positive degree in ``y``. The value is computed by
    evaluating at integer points, taking Sylvester determinants and
    interpolating; the degree bound makes the result exact.
    """
    field = unify_fields(f.field, g.field)
    f, g = f.to_field(field), g.to_field(field)
    if f.deg_in(1) < 1 or g.deg_in(1) < 1:
        raise ValueError("resultant_elim_y needs positive y-degree on both sides")
    fa, gb = _y_coeffs(f), _y_coeffs(g)
    m, n = len(fa) - 1, len(gb) - 1
    bound = n * max(0, f.deg_in(0)) + m * max(0, g.deg_in(0))
    xs, ys = [], []
    for k in range(bound + 1):
        x0 = field.coerce(k)
        a = [_eval_uni(c, x0, field) for c in fa]
        b = [_eval_uni(c, x0, field) for c in gb]
        xs.append(x0)
        ys.append(det(sylvester_matrix(a, b, field.zero), field))
    return _interpolate(xs, ys, field)


def linear_change(p: Poly, a, b, c, d) -> Poly:
    """Return ``p(a x + b y, c x + d y)``."""
    field = unify_fields(p.field, *(Poly.const(v).field for v in (a, b, c, d)))
    x = Poly.var(0, 2, field)
    y = Poly.var(1, 2, field)
    if not p.terms:
        return p.to_field(field)
    r = p.to_field(field).subs([x * a + y * b, x * c + y * d])
    return r if isinstance(r, Poly) else Poly.const(r, 2, field)


def shear(p: Poly, c) -> Poly:
    """Return ``p(x, y + c x)``; ``shear(shear(p, c), -c) == p``."""
    return linear_change(p, 1, 0, c, 1)
