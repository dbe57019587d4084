"""Sparse multivariate polynomials with exact coefficients.

A :class:`Poly` maps exponent tuples to coefficients in a single field (the
rationals or one :class:`~polarfol.exactalg.field.ExtensionField`). The same
class serves for univariate, bivariate and homogeneous trivariate
polynomials; ``nvars`` fixes the arity. Instances are treated as immutable.
"""
from __future__ import annotations

from gmpy2 import mpq

from ..errors import UnsupportedExtensionTower, ZeroInput
from .field import QQ, AlgElem, ExtensionField, field_of, unify_fields

__all__ = ["Poly", "BiPoly", "DEFAULT_NAMES", "x_", "y_"]

DEFAULT_NAMES = {1: ("x",), 2: ("x", "y"), 3: ("X0", "X1", "X2")}


def _scalar_field(value):
    return field_of(value)


class Poly:
    """Polynomial in ``nvars`` variables over an exact field.

    Parameters
    ----------
    terms : dict
        Mapping from exponent tuples to coefficients. Zero coefficients are
        dropped.
    nvars : int
        Number of variables.
    field : RationalField or ExtensionField, optional
        Coefficient field; inferred from the coefficients when omitted.
    """

    __slots__ = ("nvars", "terms", "field", "_hash")

    def __init__(self, terms=None, nvars: int = 2, field=None):
        terms = terms or {}
        if field is None:
            field = unify_fields(*(field_of(c) for c in terms.values()))
        clean = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            if any(k < 0 for k in e):
                raise ValueError("negative exponent")
            c = field.coerce(c)
            if c:
                if e in clean:
                    c = clean[e] + c
                    if not c:
                        del clean[e]
                        continue
                clean[e] = c
        self.nvars = nvars
        self.terms = clean
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, terms, nvars, field):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p.field = field
        p._hash = None
        return p

    # ---- constructors -------------------------------------------------
    @classmethod
    def zero(cls, nvars=2, field=QQ):
        return cls._raw({}, nvars, field)

    @classmethod
    def const(cls, c, nvars=2, field=None):
        field = field or field_of(c)
        c = field.coerce(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars, field)

    @classmethod
    def var(cls, i, nvars=2, field=QQ):
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): field.one}, nvars, field)

    @classmethod
    def monomial(cls, exps, coeff=1, field=None):
        field = field or field_of(coeff)
        return cls({tuple(exps): coeff}, len(exps), field)

    @classmethod
    def from_univariate(cls, coeffs, field=None):
        """Univariate polynomial from a coefficient list, lowest degree first."""
        return cls({(i,): c for i, c in enumerate(coeffs)}, 1, field)

    # ---- basic queries ------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def deg_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def order(self) -> int:
        """Minimal total degree of a nonzero term."""
        if not self.terms:
            raise ZeroInput("order of the zero polynomial")
        return min(sum(e) for e in self.terms)

    def ord_in(self, i: int) -> int:
        if not self.terms:
            raise ZeroInput("order of the zero polynomial")
        return min(e[i] for e in self.terms)

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly._raw({e: c for e, c in self.terms.items() if sum(e) == k}, self.nvars, self.field)

    def initial_form(self) -> "Poly":
        return self.homogeneous_part(self.order())

    def leading_form(self) -> "Poly":
        return self.homogeneous_part(self.degree())

    def truncate(self, k: int) -> "Poly":
        """Drop all terms of total degree >= k."""
        return Poly._raw({e: c for e, c in self.terms.items() if sum(e) < k}, self.nvars, self.field)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    # ---- field handling -----------------------------------------------
    def to_field(self, field) -> "Poly":
        if field == self.field:
            return self
        if isinstance(self.field, ExtensionField) and field != self.field:
            if not all(c.is_rational() for c in self.terms.values()):
                raise UnsupportedExtensionTower("cannot move polynomial to another extension",
                                                self.field.minimal_poly)
        return Poly._raw({e: field.coerce(c) for e, c in self.terms.items()}, self.nvars, field)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            f = unify_fields(self.field, other.field)
            return self.to_field(f), other.to_field(f)
        if isinstance(other, (int, mpq, AlgElem)) or hasattr(other, "numerator"):
            f = unify_fields(self.field, _scalar_field(other))
            return self.to_field(f), Poly.const(other, self.nvars, f)
        return None, None

    # ---- arithmetic ---------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        out = dict(a.terms)
        for e, c in b.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(out, a.nvars, a.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.nvars, self.field)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            a, b = self._coerce(other)
            if a is None:
                return NotImplemented
            c = b.constant_term()
            if not c:
                return Poly._raw({}, a.nvars, a.field)
            return Poly._raw({e: v * c for e, v in a.terms.items()}, a.nvars, a.field)
        a, b = self._coerce(other)
        out = {}
        n = a.nvars
        if n == 2:
            for (i1, j1), c1 in a.terms.items():
                for (i2, j2), c2 in b.terms.items():
                    e = (i1 + i2, j1 + j2)
                    v = out.get(e)
                    out[e] = c1 * c2 if v is None else v + c1 * c2
        else:
            for e1, c1 in a.terms.items():
                for e2, c2 in b.terms.items():
                    e = tuple(p + q for p, q in zip(e1, e2))
                    v = out.get(e)
                    out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly._raw({e: c for e, c in out.items() if c}, n, a.field)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1, self.nvars, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        return self * c

    def __truediv__(self, c):
        if isinstance(c, Poly):
            q = self.divexact(c)
            if q is None:
                raise ArithmeticError("polynomial division is not exact")
            return q
        inv = 1 / self.field.coerce(c) if not isinstance(c, AlgElem) else c.inverse()
        return self * inv

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, mpq, AlgElem)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # ---- calculus and substitution ------------------------------------
    def diff(self, i: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                out[tuple(ne)] = c * k
        return Poly._raw(out, self.nvars, self.field)

    def subs(self, values):
        """Substitute ``values[i]`` for variable ``i``.

        Values may be scalars, :class:`Poly` instances (of any arity) or
        truncated series; the result lives in the common ring.
        """
        if len(values) != self.nvars:
            raise ValueError("wrong number of substitution values")
        cache = [dict() for _ in range(self.nvars)]

        def power(i, k):
            d = cache[i]
            if k not in d:
                if k == 0:
                    d[k] = None
                elif k == 1:
                    d[k] = values[i]
                else:
                    h = power(i, k // 2)
                    sq = h * h
                    d[k] = sq * values[i] if k % 2 else sq
            return d[k]

        total = None
        for e, c in self.terms.items():
            term = None
            for i, k in enumerate(e):
                if k:
                    p = power(i, k)
                    term = p if term is None else term * p
            term = c if term is None else term * c
            total = term if total is None else total + term
        if total is None:
            return 0
        return total

    def __call__(self, *values):
        return self.subs(list(values))

    def swap(self, i: int = 0, j: int = 1) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[i], ne[j] = ne[j], ne[i]
            out[tuple(ne)] = c
        return Poly._raw(out, self.nvars, self.field)

    def coefficients_in(self, i: int):
        """Split as a polynomial in variable ``i``: ``{k: coefficient Poly}``."""
        out = {}
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            out.setdefault(k, {})[tuple(ne)] = c
        return {k: Poly._raw(v, self.nvars, self.field) for k, v in out.items()}

    def shift_exponents(self, shifts) -> "Poly":
        """Divide by the monomial with exponents ``shifts`` (must divide)."""
        out = {}
        for e, c in self.terms.items():
            ne = tuple(a - s for a, s in zip(e, shifts))
            if min(ne) < 0:
                raise ArithmeticError("monomial does not divide polynomial")
            out[ne] = c
        return Poly._raw(out, self.nvars, self.field)

    def monomial_content(self):
        """Exponent tuple of the largest monomial dividing the polynomial."""
        if not self.terms:
            raise ZeroInput("monomial content of zero")
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    # ---- division ------------------------------------------------------
    def divexact(self, other: "Poly"):
        """Exact quotient ``self / other`` or ``None`` when it does not divide."""
        a, b = self._coerce(other)
        if not b.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(a.terms)
        lt_b = max(b.terms)
        lc_b = b.terms[lt_b]
        inv = 1 / lc_b if not isinstance(lc_b, AlgElem) else lc_b.inverse()
        q = {}
        while rem:
            lt = max(rem)
            m = tuple(p - s for p, s in zip(lt, lt_b))
            if min(m) < 0:
                return None
            f = rem[lt] * inv
            q[m] = f
            for e, c in b.terms.items():
                ne = tuple(p + s for p, s in zip(e, m))
                v = rem.get(ne)
                v = -f * c if v is None else v - f * c
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return Poly._raw(q, a.nvars, a.field)

    def divides(self, other: "Poly") -> bool:
        """True when ``self`` divides ``other`` exactly."""
        return other.divexact(self) is not None

    # ---- display --------------------------------------------------------
    def fmt(self, names=None) -> str:
        names = names or DEFAULT_NAMES.get(self.nvars) or tuple(f"z{i}" for i in range(self.nvars))
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), tuple(-k for k in e))):
            c = self.terms[e]
            mon = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k
            )
            cs = self.field.fmt(c) if isinstance(c, AlgElem) else str(c)
            if isinstance(c, AlgElem) and not c.is_rational():
                cs = f"({cs})"
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append("-" + mon)
            else:
                parts.append(f"{cs}*{mon}")
        out = parts[0]
        for s in parts[1:]:
            out += (" - " + s[1:]) if s.startswith("-") else (" + " + s)
        return out

    def __repr__(self):
        return self.fmt()

    __str__ = __repr__


BiPoly = Poly


def x_(field=QQ) -> Poly:
    return Poly.var(0, 2, field)


def y_(field=QQ) -> Poly:
    return Poly.var(1, 2, field)
