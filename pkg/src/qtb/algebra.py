"""The extended affine Lie algebra sl2 over the quantum torus C_q, with d1, d2.

Basis (m, n in Z^2, k in Z^2 minus the origin)::

    e_m = E12 x^m1 y^m2     f_m = E21 x^m1 y^m2      d = E11 - E22
    g_k = E11 x^k1 y^k2     h_k = E22 x^k1 y^k2      d1, d2 (degree derivations)

The bracket is given by structure constants that are monomials in q.  Element
constructors ``g(0, 0)`` and ``h(0, 0)`` return the zero element: undefined
symbols are treated as zero so formulas can be transcribed without case splits.
"""

from __future__ import annotations

from enum import IntEnum
from functools import lru_cache
from typing import Dict, NamedTuple, Tuple

from .laurent import ONE, RatFunc, as_ratfunc, q_pow
from .linear import LinComb, accumulate

__all__ = [
    "Kind",
    "Basis",
    "AlgElement",
    "Degree",
    "e",
    "f",
    "g",
    "h",
    "d",
    "d1",
    "d2",
    "basis",
    "bracket",
    "bracket_basis",
    "degree_of",
    "jacobi_defect",
    "homogeneous_components",
    "window_basis",
]

Degree = Tuple[int, int]


class Kind(IntEnum):
    # the numeric order is the canonical serialization order
    D = 0
    D1 = 1
    D2 = 2
    E = 3
    F = 4
    G = 5
    H = 6


_INDEXED = (Kind.E, Kind.F, Kind.G, Kind.H)
_NAMES = {Kind.D: "d", Kind.D1: "d1", Kind.D2: "d2", Kind.E: "e", Kind.F: "f", Kind.G: "g", Kind.H: "h"}
KIND_BY_NAME = {v: k for k, v in _NAMES.items()}


class Basis(NamedTuple):
    """One basis vector; ``m1, m2`` are 0 for d, d1, d2."""

    kind: Kind
    m1: int = 0
    m2: int = 0

    @property
    def degree(self) -> Degree:
        if self.kind in _INDEXED:
            return (self.m1, self.m2)
        return (0, 0)

    @property
    def name(self) -> str:
        return _NAMES[self.kind]

    @property
    def has_index(self) -> bool:
        return self.kind in _INDEXED

    def __str__(self):
        if self.kind in _INDEXED:
            return "%s(%d,%d)" % (_NAMES[self.kind], self.m1, self.m2)
        return _NAMES[self.kind]

    __repr__ = __str__


def basis(kind, m1: int = 0, m2: int = 0) -> Basis:
    """Validated basis vector; raises ValueError for g/h at the origin."""
    if isinstance(kind, str):
        kind = KIND_BY_NAME[kind]
    kind = Kind(kind)
    if kind in _INDEXED:
        if kind in (Kind.G, Kind.H) and m1 == 0 and m2 == 0:
            raise ValueError("%s(0,0) is not a basis vector" % _NAMES[kind])
        return Basis(kind, int(m1), int(m2))
    if m1 or m2:
        raise ValueError("%s carries no index" % _NAMES[kind])
    return Basis(kind)


def degree_of(b: Basis) -> Degree:
    return b.degree


class AlgElement(LinComb):
    """A finite RatFunc-linear combination of :class:`Basis` vectors."""

    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        if not isinstance(key, Basis):
            raise TypeError("AlgElement keys must be Basis, got %r" % (key,))
        return key

    def degrees(self):
        return {b.degree for b in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1


def _elt(kind: Kind, m1: int = 0, m2: int = 0, coef=ONE) -> AlgElement:
    if kind in (Kind.G, Kind.H) and m1 == 0 and m2 == 0:
        return AlgElement.zero()
    return AlgElement.from_key(Basis(kind, m1, m2), coef)


def e(m1: int, m2: int) -> AlgElement:
    return _elt(Kind.E, m1, m2)


def f(m1: int, m2: int) -> AlgElement:
    return _elt(Kind.F, m1, m2)


def g(m1: int, m2: int) -> AlgElement:
    """g_k; the zero element when k = (0, 0)."""
    return _elt(Kind.G, m1, m2)


def h(m1: int, m2: int) -> AlgElement:
    """h_k; the zero element when k = (0, 0)."""
    return _elt(Kind.H, m1, m2)


d = _elt(Kind.D)
d1 = _elt(Kind.D1)
d2 = _elt(Kind.D2)


# -- structure constants -----------------------------------------------------

_Terms = Tuple[Tuple[Basis, RatFunc], ...]


def _one(kind, m1, m2, c) -> _Terms:
    if c.is_zero():
        return ()
    return ((Basis(kind, m1, m2), c),)


def _ordered_bracket(a: Basis, b: Basis) -> _Terms:
    # requires a.kind <= b.kind
    ka, kb = a.kind, b.kind
    if ka in (Kind.D1, Kind.D2):
        if kb in (Kind.D, Kind.D1, Kind.D2):
            return ()
        w = b.m1 if ka == Kind.D1 else b.m2
        return ((b, as_ratfunc(w)),) if w else ()
    if ka == Kind.D:
        if kb == Kind.E:
            return ((b, as_ratfunc(2)),)
        if kb == Kind.F:
            return ((b, as_ratfunc(-2)),)
        return ()
    m1, m2, n1, n2 = a.m1, a.m2, b.m1, b.m2
    s1, s2 = m1 + n1, m2 + n2
    if ka == Kind.E:
        if kb == Kind.E:
            return ()
        if kb == Kind.F:
            if s1 == 0 and s2 == 0:
                assert m2 * n1 == n2 * m1
                return ((Basis(Kind.D), q_pow(m2 * n1)),)
            return ((Basis(Kind.G, s1, s2), q_pow(m2 * n1)), (Basis(Kind.H, s1, s2), -q_pow(n2 * m1)))
        if kb == Kind.G:
            # [e_m, g_k] = -[g_k, e_m] = -q^{k2 m1} e_{k+m}
            return ((Basis(Kind.E, s1, s2), -q_pow(n2 * m1)),)
        # [e_m, h_k] = q^{k1 m2} e_{k+m}
        return ((Basis(Kind.E, s1, s2), q_pow(n1 * m2)),)
    if ka == Kind.F:
        if kb == Kind.F:
            return ()
        if kb == Kind.G:
            # [f_m, g_k] = q^{k1 m2} f_{k+m}
            return ((Basis(Kind.F, s1, s2), q_pow(n1 * m2)),)
        # [f_m, h_k] = -q^{k2 m1} f_{k+m}
        return ((Basis(Kind.F, s1, s2), -q_pow(n2 * m1)),)
    if ka == Kind.G and kb == Kind.H:
        return ()
    # g with g, or h with h
    return _one(ka, s1, s2, q_pow(m2 * n1) - q_pow(n2 * m1))


@lru_cache(maxsize=1 << 18)
def bracket_basis(a: Basis, b: Basis) -> _Terms:
    """[a, b] as a tuple of (basis, coefficient) pairs."""
    if a.kind <= b.kind:
        return _ordered_bracket(a, b)
    return tuple((k, -c) for k, c in _ordered_bracket(b, a))


def bracket(x: AlgElement, y: AlgElement) -> AlgElement:
    acc: Dict[Basis, RatFunc] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            terms = bracket_basis(a, b)
            if not terms:
                continue
            c = ca * cb
            for k, s in terms:
                accumulate(acc, k, c * s)
    return AlgElement._raw(acc)


def jacobi_defect(x: AlgElement, y: AlgElement, z: AlgElement) -> AlgElement:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]]."""
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))


def homogeneous_components(x: AlgElement) -> Dict[Degree, AlgElement]:
    parts: Dict[Degree, Dict] = {}
    for b, c in x.items():
        parts.setdefault(b.degree, {})[b] = c
    return {deg: AlgElement._raw(t) for deg, t in parts.items()}


def window_basis(radius: int, derivations: bool = True):
    """All basis vectors with index entries in [-radius, radius], canonical order."""
    out = [Basis(Kind.D)]
    if derivations:
        out += [Basis(Kind.D1), Basis(Kind.D2)]
    rng = range(-radius, radius + 1)
    for kind in _INDEXED:
        for m1 in rng:
            for m2 in rng:
                if kind in (Kind.G, Kind.H) and m1 == 0 and m2 == 0:
                    continue
                out.append(Basis(kind, m1, m2))
    return out
