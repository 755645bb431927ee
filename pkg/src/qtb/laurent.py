"""Exact Laurent polynomials in q and their fraction field over the rationals.

Every coefficient in the package is a :class:`RatFunc`.  Values are kept in a
canonical form so that equality, hashing and the textual form are structural:

* the numerator is a Laurent polynomial (negative exponents allowed);
* the denominator is an honest polynomial with nonzero constant term,
  integer coefficients with gcd 1 and a positive leading coefficient;
* numerator and denominator share no common polynomial factor.

A denominator that would be a monomial is folded into the numerator, so every
Laurent polynomial has denominator 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple, Union

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "ParseError",
    "q_pow",
    "as_ratfunc",
    "parse_ratfunc",
    "ZERO",
    "ONE",
]


def _norm(c):
    # ints are much faster than Fractions; keep integral values as int
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """A finite map exponent -> nonzero rational coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Dict[int, object], Iterable[Tuple[int, object]], None] = None):
        d: Dict[int, object] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if not isinstance(e, int):
                    raise TypeError("exponent must be an int, got %r" % (e,))
                c = Fraction(c) if not isinstance(c, (int, Fraction)) else c
                d[e] = d.get(e, 0) + c
        self._terms = {e: _norm(c) for e, c in d.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, object]) -> "LaurentPoly":
        # trusted constructor: terms already nonzero and normalized
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp: int, coef=1) -> "LaurentPoly":
        return cls._raw({exp: _norm(coef)}) if coef != 0 else cls._raw({})

    @property
    def terms(self) -> Dict[int, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    def leading_coefficient(self):
        return self._terms[self.degree()]

    def shift(self, n: int) -> "LaurentPoly":
        if n == 0:
            return self
        return LaurentPoly._raw({e + n: c for e, c in self._terms.items()})

    def scale(self, c) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly._raw({})
        if c == 1:
            return self
        return LaurentPoly._raw({e: _norm(v * c) for e, v in self._terms.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(self._terms) < len(other._terms):
            self, other = other, self
        d = dict(self._terms)
        for e, c in other._terms.items():
            v = d.get(e)
            if v is None:
                d[e] = c
            else:
                v = v + c
                if v == 0:
                    del d[e]
                else:
                    d[e] = _norm(v)
        return LaurentPoly._raw(d)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) == 1 and len(b) == 1:
            (e1, c1), = a.items()
            (e2, c2), = b.items()
            return LaurentPoly._raw({e1 + e2: _norm(c1 * c2)})
        d: Dict[int, object] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: _norm(c) for e, c in d.items() if c != 0})

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, x):
        """Value at a nonzero rational point (exact)."""
        x = Fraction(x)
        return sum((c * x ** e for e, c in self._terms.items()), Fraction(0))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            s = _term_text(self._terms[e], e)
            if parts and not s.startswith("-"):
                s = "+" + s
            parts.append(s)
        return "".join(parts)

    def __repr__(self):
        return "LaurentPoly(%s)" % self.to_text()


def _term_text(c, e: int) -> str:
    if e == 0:
        return str(c)
    mono = "q" if e == 1 else "q^%d" % e
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return "%s*%s" % (c, mono)


# -- dense polynomial helpers (nonnegative exponents, index = exponent) ------

def _to_dense(p: LaurentPoly) -> List[Fraction]:
    out = [Fraction(0)] * (p.degree() + 1)
    for e, c in p.items():
        out[e] = Fraction(c)
    return out


def _from_dense(coeffs: List[Fraction], shift: int = 0) -> LaurentPoly:
    return LaurentPoly._raw({i + shift: _norm(c) for i, c in enumerate(coeffs) if c != 0})


def _trim(a: List[Fraction]) -> List[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod_dense(a: List[Fraction], b: List[Fraction]):
    a = list(a)
    lb = b[-1]
    qd = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        f = a[-1] / lb
        k = len(a) - len(b)
        qd[k] = f
        for i, c in enumerate(b):
            a[i + k] -= f * c
        a.pop()
        _trim(a)
    return qd, a


def _gcd_dense(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod_dense(a, b)
        a, b = b, r
    lc = a[-1]
    return [c / lc for c in a]


def _canonical(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return _ZERO_POLY, _ONE_POLY
    if den.is_monomial():
        (e, c), = den.items()
        return num.shift(-e).scale(Fraction(1) / c), _ONE_POLY
    s = den.valuation()
    num, den = num.shift(-s), den.shift(-s)
    t = min(num.valuation(), 0)
    pn, pd = _to_dense(num.shift(-t)), _to_dense(den)
    g = _gcd_dense(pn, pd)
    if len(g) > 1:
        pn, r1 = _divmod_dense(pn, g)
        pd, r2 = _divmod_dense(pd, g)
        assert not r1 and not r2
    # denominator: primitive integer coefficients, positive leading coefficient
    lcm = 1
    for c in pd:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in pd]
    g_int = 0
    for c in ints:
        g_int = math.gcd(g_int, c)
    factor = Fraction(lcm, g_int)
    if ints[-1] < 0:
        factor = -factor
    pd = [c * factor for c in pd]
    pn = [c * factor for c in pn]
    den = _from_dense(pd)
    num = _from_dense(pn, t)
    if den.is_monomial():
        # only possible when den is the constant 1 after normalization
        return num, _ONE_POLY
    return num, den


class RatFunc:
    """An element of Q(q), stored as a canonical pair (numerator, denominator).

    >>> (q_pow(2) - 1) / (q_pow(1) - 1)
    RatFunc(q+1)
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=None, den=None):
        num = _coerce_poly(0 if num is None else num)
        den = _ONE_POLY if den is None else _coerce_poly(den)
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def _poly(cls, num: LaurentPoly) -> "RatFunc":
        return cls._raw(num, _ONE_POLY)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den is _ONE_POLY or self.den == _ONE_POLY

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError("%s is not a Laurent polynomial" % self.to_text())
        return self.num

    def canonicalize(self) -> "RatFunc":
        return RatFunc(self.num, self.den)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "RatFunc":
        other = as_ratfunc(other)
        if self.den is _ONE_POLY and other.den is _ONE_POLY:
            return RatFunc._poly(self.num + other.num)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        return self + (-as_ratfunc(other))

    def __rsub__(self, other) -> "RatFunc":
        return as_ratfunc(other) + (-self)

    def __mul__(self, other) -> "RatFunc":
        other = as_ratfunc(other)
        if self.den is _ONE_POLY and other.den is _ONE_POLY:
            return RatFunc._poly(self.num * other.num)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other) -> "RatFunc":
        return self * as_ratfunc(other).inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return as_ratfunc(other) * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self == as_ratfunc(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def evaluate(self, x) -> Fraction:
        return self.num.evaluate(x) / self.den.evaluate(x)

    def to_text(self) -> str:
        n = self.num.to_text()
        if self.is_laurent():
            return n
        if len(self.num) > 1:
            n = "(" + n + ")"
        return "%s/(%s)" % (n, self.den.to_text())

    __str__ = to_text

    def __repr__(self):
        return "RatFunc(%s)" % self.to_text()


_ZERO_POLY = LaurentPoly._raw({})
_ONE_POLY = LaurentPoly._raw({0: 1})


def _coerce_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly._raw({0: _norm(x)} if x != 0 else {})
    raise TypeError("cannot interpret %r as a Laurent polynomial" % (x,))


def as_ratfunc(x) -> RatFunc:
    """Coerce an int, Fraction, LaurentPoly or RatFunc to a RatFunc."""
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc._poly(x)
    if isinstance(x, (int, Fraction)):
        if x == 0:
            return ZERO
        if x == 1:
            return ONE
        return RatFunc._poly(LaurentPoly._raw({0: _norm(Fraction(x))}))
    if isinstance(x, str):
        return parse_ratfunc(x)
    raise TypeError("cannot interpret %r as a rational function" % (x,))


ZERO = RatFunc._raw(_ZERO_POLY, _ONE_POLY)
ONE = RatFunc._raw(_ONE_POLY, _ONE_POLY)


@lru_cache(maxsize=4096)
def q_pow(n: int) -> RatFunc:
    """The monomial q**n."""
    return RatFunc._poly(LaurentPoly._raw({n: 1}))


# -- text form ---------------------------------------------------------------

class ParseError(ValueError):
    """Malformed coefficient text.  ``column`` is 1-based."""

    def __init__(self, message: str, text: str, column: int):
        super().__init__("%s at column %d in %r" % (message, column, text))
        self.reason = message
        self.text = text
        self.column = column


class _Parser:
    # expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)*
    # unary := ('+'|'-') unary | power ; power := atom ['^' ['-'|'+'] INT]
    # atom := INT | 'q' | '(' expr ')'

    def __init__(self, text: str):
        self.text = text
        self.toks = self._tokenize(text)
        self.i = 0

    def _tokenize(self, s):
        toks, i = [], 0
        while i < len(s):
            ch = s[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(s) and s[j].isdigit():
                    j += 1
                toks.append(("int", int(s[i:j]), i))
                i = j
            elif ch in "q+-*/^()":
                toks.append((ch, ch, i))
                i += 1
            else:
                raise ParseError("unexpected character %r" % ch, s, i + 1)
        toks.append(("end", None, len(s)))
        return toks

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2] + 1)

    def parse(self) -> RatFunc:
        if self.peek()[0] == "end":
            self.fail("empty coefficient")
        v = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected %r" % (self.peek()[1],))
        return v

    def expr(self):
        v = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[0] in ("*", "/"):
            tok = self.take()
            w = self.unary()
            if tok[0] == "*":
                v = v * w
            else:
                if w.is_zero():
                    self.fail("division by zero", tok)
                v = v / w
        return v

    def unary(self):
        if self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            v = self.unary()
            return -v if op == "-" else v
        return self.power()

    def power(self):
        base_tok = self.peek()
        v = self.atom()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            if self.peek()[0] in ("+", "-"):
                sign = -1 if self.take()[0] == "-" else 1
            tok = self.peek()
            if tok[0] != "int":
                self.fail("expected integer exponent")
            self.take()
            n = sign * tok[1]
            if n < 0 and v.is_zero():
                self.fail("zero raised to a negative power", base_tok)
            v = v ** n
        return v

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return as_ratfunc(tok[1])
        if tok[0] == "q":
            self.take()
            return q_pow(1)
        if tok[0] == "(":
            self.take()
            v = self.expr()
            if self.peek()[0] != ")":
                self.fail("expected ')'")
            self.take()
            return v
        if tok[0] == "end":
            self.fail("unexpected end of input")
        self.fail("unexpected %r" % (tok[1],))


def parse_ratfunc(text: str) -> RatFunc:
    """Parse the coefficient grammar, e.g. ``"(q^2+1)/q"``, ``"1-q"``, ``"1/2*q^-3"``."""
    if not isinstance(text, str):
        raise TypeError("coefficient text must be a string")
    return _Parser(text).parse()
