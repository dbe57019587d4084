"""Text input for polynomials, 1-forms and homogeneous triples.

Grammar (EBNF)::

    input     = [ field_decl ] body ;
    field_decl= "field" ident ":" expr ";" ;
    body      = expr | expr "," expr "," expr ;
    expr      = [ sign ] term { sign term } ;
    sign      = "+" | "-" ;
    term      = power { [ "*" | "/" ] power } ;
    power     = atom [ "^" integer ] ;
    atom      = number | ident | "dx" | "dy" | "d" "(" expr ")" | "(" expr ")" | sign atom ;
    number    = digit { digit } [ "/" digit { digit } ] ;

A 1-form is an ``expr`` in which every term carries at most one of ``dx``,
``dy`` or ``d(f)``. Division is only by nonzero constants. Juxtaposition
multiplies, so ``2 x y dx`` is read as ``2*x*y*dx``. The optional field
declaration adjoins a root of an irreducible polynomial; its name can then
appear in coefficients.
"""
from __future__ import annotations

import re
from typing import NamedTuple

from gmpy2 import mpq

from .errors import ParseError
from .exactalg import QQ, ExtensionField, Poly

__all__ = ["parse_poly", "parse_form", "parse_triple", "parse_input", "Parsed", "tokenize"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^(),:;]))")


class Parsed(NamedTuple):
    kind: str  # "poly", "form" or "triple"
    value: object
    field: object


def tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}",
                             len(text) - len(text[pos:].lstrip()))
        start = m.start(m.lastindex)
        kind = ("num", "id", "op")[m.lastindex - 1]
        val = m.group(m.lastindex)
        out.append((kind, "^" if val == "**" else val, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Form:
    """``f + P dx + Q dy`` with either ``f`` or ``(P, Q)`` present."""

    __slots__ = ("f", "P", "Q")

    def __init__(self, f=None, P=None, Q=None):
        self.f, self.P, self.Q = f, P, Q

    @property
    def is_form(self):
        return self.P is not None


class _Parser:
    def __init__(self, text, names, field, allow_forms):
        self.toks = tokenize(text)
        self.i = 0
        self.names = tuple(names)
        self.field = field
        self.gen = None
        self.allow_forms = allow_forms

    # ---- token helpers --------------------------------------------------
    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, val):
        t = self.take()
        if t[1] != val:
            raise ParseError(f"expected {val!r}, found {t[1] or 'end of input'!r}", t[2])
        return t

    # ---- values ---------------------------------------------------------
    def const(self, c):
        return _Form(f=Poly.const(c, len(self.names), self.field))

    def add(self, a, b, pos):
        if a.is_form != b.is_form:
            if a.is_form and not b.f.terms:
                return a
            if b.is_form and not a.f.terms:
                return b
            raise ParseError("cannot add a function and a 1-form", pos)
        if a.is_form:
            return _Form(P=a.P + b.P, Q=a.Q + b.Q)
        return _Form(f=a.f + b.f)

    def neg(self, a):
        return _Form(P=-a.P, Q=-a.Q) if a.is_form else _Form(f=-a.f)

    def mul(self, a, b, pos):
        if a.is_form and b.is_form:
            raise ParseError("product of two 1-forms", pos)
        if a.is_form:
            a, b = b, a
        if b.is_form:
            return _Form(P=a.f * b.P, Q=a.f * b.Q)
        return _Form(f=a.f * b.f)

    # ---- grammar --------------------------------------------------------
    def expr(self):
        t = self.peek()
        neg = False
        if t[1] in ("+", "-"):
            self.take()
            neg = t[1] == "-"
        v = self.term()
        if neg:
            v = self.neg(v)
        while self.peek()[1] in ("+", "-"):
            op = self.take()
            w = self.term()
            v = self.add(v, w if op[1] == "+" else self.neg(w), op[2])
        return v

    def _starts_atom(self, t):
        return t[0] in ("num", "id") or t[1] == "("

    def term(self):
        v = self.power()
        while True:
            t = self.peek()
            if t[1] == "*":
                self.take()
                v = self.mul(v, self.power(), t[2])
            elif t[1] == "/":
                self.take()
                d = self.power()
                if d.is_form or not d.f.is_constant() or not d.f.terms:
                    raise ParseError("division only by nonzero constants", t[2])
                c = d.f.constant_term()
                v = self.mul(v, self.const(1 / c if not hasattr(c, "inverse") else c.inverse()), t[2])
            elif self._starts_atom(t):
                v = self.mul(v, self.power(), t[2])
            else:
                return v

    def power(self):
        v = self.atom()
        t = self.peek()
        if t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "num":
                raise ParseError("exponent must be a nonnegative integer", e[2])
            if v.is_form:
                raise ParseError("power of a 1-form", t[2])
            v = _Form(f=v.f ** int(e[1]))
        return v

    def atom(self):
        t = self.take()
        kind, val, pos = t
        if val in ("+", "-"):
            v = self.atom()
            return self.neg(v) if val == "-" else v
        if kind == "num":
            if self.peek()[1] == "/" and self.toks[self.i + 1][0] == "num":
                self.take()
                den = self.take()
                if int(den[1]) == 0:
                    raise ParseError("division by zero", den[2])
                return self.const(mpq(int(val), int(den[1])))
            return self.const(mpq(int(val)))
        if val == "(":
            v = self.expr()
            self.expect(")")
            return v
        if kind == "id":
            if val in self.names:
                return _Form(f=Poly.var(self.names.index(val), len(self.names), self.field))
            if self.gen is not None and val == self.gen[0]:
                return self.const(self.gen[1])
            if self.allow_forms and len(self.names) == 2:
                if val == "dx":
                    return self._differential(0)
                if val == "dy":
                    return self._differential(1)
                if val == "d" and self.peek()[1] == "(":
                    self.take()
                    inner = self.expr()
                    self.expect(")")
                    if inner.is_form:
                        raise ParseError("d() of a 1-form", pos)
                    return _Form(P=inner.f.diff(0), Q=inner.f.diff(1))
            raise ParseError(f"unknown symbol {val!r}", pos)
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)

    def _differential(self, i):
        n = len(self.names)
        one, zero = Poly.const(1, n, self.field), Poly.zero(n, self.field)
        return _Form(P=one if i == 0 else zero, Q=one if i == 1 else zero)

    def field_decl(self):
        if not (self.peek()[1] == "field" and self.toks[self.i + 1][0] == "id"):
            return
        self.take()
        name = self.take()[1]
        self.expect(":")
        sub = _Parser.__new__(_Parser)
        sub.toks, sub.i, sub.names, sub.field, sub.gen, sub.allow_forms = (
            self.toks, self.i, (name,), QQ, None, False)
        mp = sub.expr().f
        self.i = sub.i
        semi = self.expect(";")
        coeffs = [mp.coeff((k,)) for k in range(mp.degree() + 1)]
        if len(coeffs) < 3:
            raise ParseError("field polynomial must have degree at least 2", semi[2])
        lead = coeffs[-1]
        try:
            K = ExtensionField([c / lead for c in coeffs], name)
        except ValueError as exc:
            raise ParseError(str(exc), semi[2]) from None
        self.field = K
        self.gen = (name, K.gen)

    def finish(self):
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected {t[1]!r}", t[2])


def _parse(text, names, allow_forms):
    p = _Parser(text, names, QQ, allow_forms)
    p.field_decl()
    parts = [p.expr()]
    while p.peek()[1] == ",":
        p.take()
        parts.append(p.expr())
    p.finish()
    return parts, p.field


def parse_input(text: str) -> Parsed:
    """Parse a polynomial in ``x, y``, a 1-form, or a triple in ``X0, X1, X2``."""
    if re.search(r"\bX[012]\b", text):
        parts, field = _parse(text, ("X0", "X1", "X2"), False)
        if len(parts) == 3:
            return Parsed("triple", tuple(v.f for v in parts), field)
        if len(parts) == 1:
            return Parsed("poly", parts[0].f, field)
        raise ParseError("expected one polynomial or three comma-separated ones", 0)
    parts, field = _parse(text, ("x", "y"), True)
    if len(parts) != 1:
        raise ParseError("a local input is a single expression", 0)
    v = parts[0]
    if v.is_form:
        return Parsed("form", (v.P.to_field(field), v.Q.to_field(field)), field)
    return Parsed("poly", v.f.to_field(field), field)


def parse_poly(text: str, names=("x", "y")) -> Poly:
    """Parse a polynomial.

    Examples
    --------
    >>> parse_poly("y^2 - x^3").fmt()
    'y^2 - x^3'
    """
    parts, field = _parse(text, names, False)
    if len(parts) != 1:
        raise ParseError("expected a single polynomial", 0)
    return parts[0].f.to_field(field)


def parse_form(text: str):
    """Parse ``P dx + Q dy`` (or ``d(f)``) into the pair ``(P, Q)``.

    Examples
    --------
    >>> P, Q = parse_form("y dx - x^3 dy")
    >>> P.fmt(), Q.fmt()
    ('y', '-x^3')
    """
    r = parse_input(text)
    if r.kind != "form":
        raise ParseError("expected a 1-form with dx, dy or d(...)", 0)
    return r.value


def parse_triple(text: str):
    """Parse three comma-separated homogeneous polynomials in ``X0, X1, X2``."""
    parts, field = _parse(text, ("X0", "X1", "X2"), False)
    if len(parts) != 3:
        raise ParseError("expected three comma-separated polynomials", 0)
    return tuple(v.f.to_field(field) for v in parts)
