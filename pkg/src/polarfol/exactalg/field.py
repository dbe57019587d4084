"""Exact scalar fields: the rationals and one simple algebraic extension Q(a).

Rationals are plain :class:`gmpy2.mpq` values. Elements of an extension are
:class:`AlgElem` instances holding their coordinates in the power basis
``1, a, ..., a^(n-1)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

from ..errors import UnsupportedExtensionTower

__all__ = ["QQ", "Q", "RationalField", "ExtensionField", "AlgElem", "field_of", "unify_fields"]


def Q(value) -> mpq:
    """Coerce an int, Fraction, decimal-free string or mpq into an mpq."""
    if isinstance(value, mpq):
        return value
    if isinstance(value, AlgElem):
        if value.is_rational():
            return value.c[0]
        raise TypeError(f"{value} is not rational")
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted")
    return mpq(value)


class RationalField:
    kind = "rationals"
    degree = 1
    minimal_poly = None

    def coerce(self, value):
        if isinstance(value, AlgElem):
            if value.is_rational():
                return value.c[0]
            raise UnsupportedExtensionTower(
                "element of an extension field used over the rationals", value.field.minimal_poly
            )
        return Q(value)

    @property
    def zero(self):
        return mpq(0)

    @property
    def one(self):
        return mpq(1)

    def is_rational(self, value) -> bool:
        return True

    def sympy_domain(self):
        from sympy import QQ as SQQ

        return SQQ

    def to_domain(self, value):
        return self.sympy_domain()(int(value.numerator), int(value.denominator))

    def from_domain(self, value):
        return mpq(value)

    def fmt(self, value) -> str:
        return str(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def to_json(self):
        return {"kind": "rationals"}


QQ = RationalField()


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(a, b):
    a = list(a)
    q = [mpq(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        f = a[-1] / lb
        q[k] = f
        for i, bi in enumerate(b):
            a[i + k] -= f * bi
        a = _trim(a)
    return _trim(q), a


class ExtensionField:
    """The number field Q(a) with a root a of a monic irreducible polynomial.

    Parameters
    ----------
    minimal_poly : sequence
        Coefficients of the minimal polynomial, lowest degree first. Must be
        monic, of degree at least two and irreducible over Q.
    name : str
        Display name of the generator.
    """

    kind = "simple-extension"

    def __init__(self, minimal_poly, name: str = "a", check: bool = True):
        coeffs = [Q(c) for c in minimal_poly]
        coeffs = _trim(coeffs)
        if len(coeffs) < 3:
            raise ValueError("minimal polynomial must have degree >= 2")
        if coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.minimal_poly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.name = name
        if check and not _is_irreducible_q(self.minimal_poly):
            raise ValueError(f"minimal polynomial {self.minimal_poly} is reducible over Q")

    def coerce(self, value):
        if isinstance(value, AlgElem):
            if value.field == self:
                return value
            if value.is_rational():
                return AlgElem(self, (value.c[0],))
            raise UnsupportedExtensionTower(
                "cannot mix two different algebraic extensions", value.field.minimal_poly
            )
        return AlgElem(self, (Q(value),))

    @property
    def zero(self):
        return AlgElem(self, ())

    @property
    def one(self):
        return AlgElem(self, (mpq(1),))

    @property
    def gen(self):
        return AlgElem(self, (mpq(0), mpq(1)))

    def is_rational(self, value) -> bool:
        return not isinstance(value, AlgElem) or value.is_rational()

    def sympy_domain(self):
        return _sympy_alg_field(self.minimal_poly)

    def to_domain(self, value):
        dom = self.sympy_domain()
        value = self.coerce(value)
        from sympy import QQ as SQQ

        rep = [SQQ(int(c.numerator), int(c.denominator)) for c in reversed(value.c)]
        return dom(rep) if rep else dom.zero

    def from_domain(self, value):
        lst = value.to_list() if hasattr(value, "to_list") else [value]
        return AlgElem(self, tuple(mpq(c) for c in reversed(lst)))

    def fmt(self, value) -> str:
        return self.coerce(value)._fmt()

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and other.minimal_poly == self.minimal_poly

    def __hash__(self):
        return hash(("ext", self.minimal_poly))

    def __repr__(self):
        return f"QQ[{self.name}]/({_upoly_str(self.minimal_poly, self.name)})"

    def to_json(self):
        return {"kind": "simple-extension", "minimal_poly": [str(c) for c in self.minimal_poly],
                "name": self.name}


def _upoly_str(coeffs, var):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mon and c == 1:
            s = mon
        elif mon and c == -1:
            s = "-" + mon
        elif mon:
            s = f"{c}*{mon}"
        else:
            s = str(c)
        terms.append(s)
    if not terms:
        return "0"
    out = terms[0]
    for s in terms[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


@lru_cache(maxsize=64)
def _sympy_alg_field(minpoly):
    from sympy import CRootOf, QQ as SQQ, Poly, Symbol

    t = Symbol("t")
    p = Poly([SQQ(int(c.numerator), int(c.denominator)) for c in reversed(minpoly)], t, domain=SQQ)
    return SQQ.algebraic_field(CRootOf(p.as_expr(), 0))


def _is_irreducible_q(coeffs) -> bool:
    from sympy import Poly, QQ as SQQ, Symbol

    t = Symbol("t")
    p = Poly([SQQ(int(c.numerator), int(c.denominator)) for c in reversed(coeffs)], t, domain=SQQ)
    return p.is_irreducible


class AlgElem:
    """Element of an :class:`ExtensionField`, stored in the power basis."""

    __slots__ = ("field", "c")

    def __init__(self, field: ExtensionField, coeffs):
        self.field = field
        c = _trim(coeffs)
        if len(c) > field.degree:
            c = _reduce(c, field.minimal_poly)
        self.c = tuple(c)

    def is_rational(self) -> bool:
        return len(self.c) <= 1

    def _other(self, other):
        if isinstance(other, AlgElem):
            if other.field != self.field:
                if other.is_rational():
                    return other.c
                if self.is_rational():
                    return None
                raise UnsupportedExtensionTower(
                    "cannot mix two different algebraic extensions", other.field.minimal_poly
                )
            return other.c
        if isinstance(other, (int, mpq, Fraction)):
            v = Q(other)
            return (v,) if v != 0 else ()
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if o is None:
            return other + self.c[0] if self.c else other
        n = max(len(self.c), len(o))
        a = self.c + (mpq(0),) * (n - len(self.c))
        b = tuple(o) + (mpq(0),) * (n - len(o))
        return AlgElem(self.field, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.field, [-x for x in self.c])

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if o is None:
            return other * self.c[0] if self.c else other * 0
        if not o or not self.c:
            return AlgElem(self.field, ())
        if len(o) == 1:
            return AlgElem(self.field, [x * o[0] for x in self.c])
        prod = [mpq(0)] * (len(self.c) + len(o) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(o):
                    prod[i + j] += x * y
        return AlgElem(self.field, prod)

    __rmul__ = __mul__

    def inverse(self):
        if not self.c:
            raise ZeroDivisionError("inverse of zero in extension field")
        if len(self.c) == 1:
            return AlgElem(self.field, (1 / self.c[0],))
        # extended Euclid in Q[t]: s*self + u*m = 1
        r0, r1 = list(self.field.minimal_poly), list(self.c)
        s0, s1 = [], [mpq(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        g = r0[0]
        return AlgElem(self.field, [x / g for x in s0])

    def __truediv__(self, other):
        if isinstance(other, AlgElem):
            o = other.field.coerce(other) if other.field == self.field else self.field.coerce(other)
            return self * o.inverse()
        return self * (1 / Q(other))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = AlgElem(self.field, (mpq(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, AlgElem):
            if other.field != self.field:
                return self.is_rational() and other.is_rational() and self.c == other.c
            return self.c == other.c
        if isinstance(other, (int, mpq, Fraction)):
            v = Q(other)
            return self.c == ((v,) if v != 0 else ())
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if len(self.c) <= 1:
            return hash(self.c[0] if self.c else 0)
        return hash(self.c)

    def __bool__(self):
        return bool(self.c)

    def _fmt(self):
        return _upoly_str(self.c, self.field.name)

    def __repr__(self):
        return self._fmt()

    __str__ = __repr__


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [mpq(0)] * (n - len(a))
    b = list(b) + [mpq(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _reduce(c, m):
    _, r = _poly_divmod(c, m)
    return r


def field_of(value):
    """Return the field a scalar lives in."""
    if isinstance(value, AlgElem):
        return value.field
    return QQ


def unify_fields(*fields):
    """Smallest common field of ``fields``; raises on two distinct extensions."""
    out = QQ
    for f in fields:
        if isinstance(f, ExtensionField):
            if isinstance(out, ExtensionField) and out != f:
                raise UnsupportedExtensionTower(
                    "two different algebraic extensions meet", f.minimal_poly
                )
            out = f
    return out
