"""2x2 matrices over the quantum torus: a brute-force model of the algebra.

Elements are sums of ``c * E_ij x^a y^b`` kept in the normal form x-before-y.
Only the relation ``y x = q x y`` is used, which gives the product rule

    (E_ij x^a y^b)(E_kl x^c y^d) = delta_jk q^(b*c) E_il x^(a+c) y^(b+d).

Nothing here consults the structure constants in :mod:`qtb.algebra`, so the
commutator below is an independent route to the bracket.
"""

from __future__ import annotations

from typing import Dict, NamedTuple

from .algebra import AlgElement, Basis, Kind
from .laurent import ONE, RatFunc, q_pow
from .linear import LinComb, accumulate

__all__ = [
    "TorusKey",
    "TorusElement",
    "DegreeDerivationNotRepresentable",
    "NotInImage",
    "torus_mul",
    "embed",
    "embed_element",
    "oracle_bracket",
    "project",
]


class DegreeDerivationNotRepresentable(ValueError):
    """d1 and d2 are outer derivations; they have no matrix."""


class NotInImage(ValueError):
    """A diagonal constant term that is not a multiple of E11 - E22."""


class TorusKey(NamedTuple):
    i: int
    j: int
    a: int
    b: int

    def __str__(self):
        return "E%d%d*x^%d*y^%d" % self


class TorusElement(LinComb):
    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        key = TorusKey(*key)
        if key.i not in (1, 2) or key.j not in (1, 2):
            raise ValueError("matrix unit indices must be 1 or 2: %r" % (key,))
        return key

    @classmethod
    def unit(cls, i, j, a=0, b=0, coef=ONE) -> "TorusElement":
        return cls.from_key(TorusKey(i, j, a, b), coef)


def torus_mul(s: TorusElement, t: TorusElement) -> TorusElement:
    acc: Dict[TorusKey, RatFunc] = {}
    for (i, j, a, b), c1 in s.items():
        for (k, l, c, dd), c2 in t.items():
            if j != k:
                continue
            accumulate(acc, TorusKey(i, l, a + c, b + dd), c1 * c2 * q_pow(b * c))
    return TorusElement._raw(acc)


def oracle_bracket(s: TorusElement, t: TorusElement) -> TorusElement:
    return torus_mul(s, t) - torus_mul(t, s)


_UNIT = {Kind.E: (1, 2), Kind.F: (2, 1), Kind.G: (1, 1), Kind.H: (2, 2)}


def embed(b: Basis) -> TorusElement:
    if b.kind in (Kind.D1, Kind.D2):
        raise DegreeDerivationNotRepresentable("%s is not a matrix over the quantum torus" % (b,))
    if b.kind == Kind.D:
        return TorusElement._raw({TorusKey(1, 1, 0, 0): ONE, TorusKey(2, 2, 0, 0): -ONE})
    i, j = _UNIT[b.kind]
    return TorusElement._raw({TorusKey(i, j, b.m1, b.m2): ONE})


def embed_element(x: AlgElement) -> TorusElement:
    return sum((embed(b).scale(c) for b, c in x.items()), TorusElement.zero())


def project(t: TorusElement) -> AlgElement:
    """Inverse of :func:`embed` on its linear span."""
    terms: Dict[Basis, RatFunc] = {}
    diag = {}
    for (i, j, a, b), c in t.items():
        if i != j:
            kind = Kind.E if i == 1 else Kind.F
            terms[Basis(kind, a, b)] = c
        elif a == 0 and b == 0:
            diag[i] = c
        else:
            terms[Basis(Kind.G if i == 1 else Kind.H, a, b)] = c
    if diag:
        c11 = diag.get(1, RatFunc())
        c22 = diag.get(2, RatFunc())
        if not (c11 + c22).is_zero():
            raise NotInImage(
                "constant diagonal part %s*E11 + %s*E22 is not a multiple of E11 - E22"
                % (c11.to_text(), c22.to_text())
            )
        terms[Basis(Kind.D)] = c11
    return AlgElement._raw(terms)
