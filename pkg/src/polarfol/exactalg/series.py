"""Truncated power series with tracked precision.

:class:`UniSeries` is a series in one variable ``t`` known modulo ``t^prec``
(``prec=None`` marks an exact polynomial). :class:`TruncSeries` is the
bivariate analogue, known modulo terms of total degree ``>= trunc_order``.
Every operation propagates the worst-case valid precision.
"""
from __future__ import annotations

from gmpy2 import mpq

from ..errors import TruncationInsufficient, ZeroInput
from .field import QQ, AlgElem, field_of, unify_fields

__all__ = ["UniSeries", "TruncSeries", "INF"]

INF = None


def _minp(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _addp(a, k):
    return None if a is None else a + k


class UniSeries:
    """Univariate series ``sum c[i] t^i`` known modulo ``t^prec``."""

    __slots__ = ("c", "prec", "field")

    def __init__(self, coeffs, prec=None, field=None):
        coeffs = list(coeffs)
        if field is None:
            field = unify_fields(*(field_of(c) for c in coeffs))
        coeffs = [field.coerce(c) for c in coeffs]
        if prec is not None:
            coeffs = coeffs[:prec]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.c = coeffs
        self.prec = prec
        self.field = field

    @classmethod
    def _raw(cls, coeffs, prec, field):
        s = cls.__new__(cls)
        if prec is not None and len(coeffs) > prec:
            coeffs = coeffs[:prec]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        s.c = coeffs
        s.prec = prec
        s.field = field
        return s

    @classmethod
    def t(cls, field=QQ):
        return cls._raw([field.zero, field.one], None, field)

    @classmethod
    def monomial(cls, k, coeff=1, field=None):
        field = field or field_of(coeff)
        return cls._raw([field.zero] * k + [field.coerce(coeff)], None, field)

    @classmethod
    def const(cls, c, field=None):
        field = field or field_of(c)
        return cls._raw([field.coerce(c)], None, field)

    def is_exact(self) -> bool:
        return self.prec is None

    def is_exact_zero(self) -> bool:
        return self.prec is None and not self.c

    def valuation(self) -> int:
        """Order in ``t``.

        Raises
        ------
        TruncationInsufficient
            When the series is zero to its precision.
        ZeroInput
            For the exact zero series.
        """
        for i, v in enumerate(self.c):
            if v:
                return i
        if self.prec is None:
            raise ZeroInput("valuation of the exact zero series")
        raise TruncationInsufficient(f"series is O(t^{self.prec})", needed=self.prec)

    order = valuation

    def leading_coefficient(self):
        return self.c[self.valuation()]

    def coefficient(self, k):
        if self.prec is not None and k >= self.prec:
            raise TruncationInsufficient(f"coefficient {k} beyond precision {self.prec}")
        return self.c[k] if k < len(self.c) else self.field.zero

    def _unify(self, other):
        if isinstance(other, UniSeries):
            f = unify_fields(self.field, other.field)
            a = self if f == self.field else UniSeries._raw([f.coerce(v) for v in self.c], self.prec, f)
            b = other if f == other.field else UniSeries._raw([f.coerce(v) for v in other.c], other.prec, f)
            return a, b
        if isinstance(other, (int, mpq, AlgElem)):
            f = unify_fields(self.field, field_of(other))
            a = self if f == self.field else UniSeries._raw([f.coerce(v) for v in self.c], self.prec, f)
            return a, UniSeries._raw([f.coerce(other)], None, f)
        return None, None

    def __add__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        n = max(len(a.c), len(b.c))
        ca = a.c + [a.field.zero] * (n - len(a.c))
        cb = b.c + [a.field.zero] * (n - len(b.c))
        return UniSeries._raw([x + y for x, y in zip(ca, cb)], _minp(a.prec, b.prec), a.field)

    __radd__ = __add__

    def __neg__(self):
        return UniSeries._raw([-v for v in self.c], self.prec, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _val_or_prec(self):
        for i, v in enumerate(self.c):
            if v:
                return i
        return self.prec  # None for exact zero -> treated as infinite

    def __mul__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        if a.is_exact_zero() or b.is_exact_zero():
            return UniSeries._raw([], None, a.field)
        va, vb = a._val_or_prec(), b._val_or_prec()
        # a known mod t^pa, b mod t^pb -> product known mod t^min(pa+vb, pb+va)
        cand = []
        if a.prec is not None:
            cand.append(a.prec + vb)
        if b.prec is not None:
            cand.append(b.prec + va)
        prec = min(cand) if cand else None
        limit = prec if prec is not None else len(a.c) + len(b.c)
        out = [a.field.zero] * max(min(len(a.c) + len(b.c) - 1, limit), 0)
        n = len(out)
        for i, x in enumerate(a.c):
            if not x or i >= n:
                continue
            for j, y in enumerate(b.c):
                k = i + j
                if k >= n:
                    break
                if y:
                    out[k] = out[k] + x * y
        return UniSeries._raw(out, prec, a.field)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UniSeries._raw([self.field.one], None, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self) -> "UniSeries":
        prec = None if self.prec is None else max(self.prec - 1, 0)
        return UniSeries._raw([v * i for i, v in enumerate(self.c)][1:], prec, self.field)

    def truncate(self, prec: int) -> "UniSeries":
        return UniSeries._raw(list(self.c[:prec]), _minp(self.prec, prec), self.field)

    def shift_down(self, k: int) -> "UniSeries":
        """Exact division by ``t^k`` (the first ``k`` coefficients must vanish)."""
        if any(self.c[:k]):
            raise ArithmeticError("series not divisible by t^k")
        prec = None if self.prec is None else self.prec - k
        return UniSeries._raw(list(self.c[k:]), prec, self.field)

    def inverse(self) -> "UniSeries":
        """Multiplicative inverse of a unit series."""
        if not self.c or not self.c[0]:
            raise ZeroDivisionError("series is not a unit")
        prec = self.prec
        if prec is None:
            raise ValueError("inverse of an exact non-constant series needs a precision")
        inv0 = 1 / self.c[0] if not isinstance(self.c[0], AlgElem) else self.c[0].inverse()
        out = [inv0]
        for k in range(1, prec):
            s = self.field.zero
            for j in range(1, min(k, len(self.c) - 1) + 1):
                s = s + self.c[j] * out[k - j]
            out.append(-s * inv0)
        return UniSeries._raw(out, prec, self.field)

    def divide(self, other: "UniSeries") -> "UniSeries":
        """Quotient ``self / other`` when ``ord other <= ord self``."""
        v = other.valuation()
        num = self.shift_down(v)
        den = other.shift_down(v)
        if len(den.c) == 1 and den.prec is None:
            c = den.c[0]
            inv = 1 / c if not isinstance(c, AlgElem) else c.inverse()
            return num * inv
        if den.prec is None:
            den = den.with_prec(num.prec if num.prec is not None else len(num.c) + len(den.c))
        return num * den.inverse()

    def with_prec(self, prec) -> "UniSeries":
        return UniSeries._raw(list(self.c), _minp(self.prec, prec), self.field)

    def __eq__(self, other):
        if isinstance(other, UniSeries):
            return self.c == other.c and self.prec == other.prec
        return NotImplemented

    def __hash__(self):
        return hash((tuple(self.c), self.prec))

    def fmt(self, var="t") -> str:
        parts = []
        for i, v in enumerate(self.c):
            if not v:
                continue
            cs = self.field.fmt(v)
            if isinstance(v, AlgElem) and not v.is_rational():
                cs = f"({cs})"
            mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append("-" + mon)
            else:
                parts.append(f"{cs}*{mon}")
        s = parts[0] if parts else "0"
        for p in parts[1:]:
            s += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        if self.prec is not None:
            s += f" + O({var}^{self.prec})"
        return s

    def __repr__(self):
        return self.fmt()


class TruncSeries:
    """Bivariate series known modulo terms of total degree ``>= trunc_order``."""

    __slots__ = ("coeffs", "trunc_order", "field")

    def __init__(self, coeffs, trunc_order: int, field=None):
        if trunc_order < 1:
            raise ValueError("trunc_order must be positive")
        if field is None:
            field = unify_fields(*(field_of(c) for c in coeffs.values()))
        self.coeffs = {tuple(e): field.coerce(c) for e, c in coeffs.items()
                       if sum(e) < trunc_order and c}
        self.coeffs = {e: c for e, c in self.coeffs.items() if c}
        self.trunc_order = trunc_order
        self.field = field

    @classmethod
    def from_poly(cls, p, trunc_order: int):
        return cls(p.terms, trunc_order, p.field)

    def order(self) -> int:
        if not self.coeffs:
            raise TruncationInsufficient(
                f"series is zero to order {self.trunc_order}", needed=self.trunc_order)
        return min(sum(e) for e in self.coeffs)

    def _v(self):
        return min((sum(e) for e in self.coeffs), default=self.trunc_order)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.trunc_order, other.trunc_order)
        f = unify_fields(self.field, other.field)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, f.zero) + c
        return TruncSeries(out, n, f)

    def __neg__(self):
        return TruncSeries({e: -c for e, c in self.coeffs.items()}, self.trunc_order, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            f = unify_fields(self.field, field_of(other))
            return TruncSeries({e: c * other for e, c in self.coeffs.items()}, self.trunc_order, f)
        n = min(self.trunc_order + other._v(), other.trunc_order + self._v())
        f = unify_fields(self.field, other.field)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = (e1[0] + e2[0], e1[1] + e2[1])
                if sum(e) < n:
                    out[e] = out.get(e, f.zero) + c1 * c2
        return TruncSeries(out, n, f)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and self.trunc_order == other.trunc_order
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"TruncSeries({self.coeffs}, N={self.trunc_order})"
