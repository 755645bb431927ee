"""Seeded random generators for coefficients, elements, tensors and tables.

All generators take a :class:`random.Random` so that every randomized check
is reproducible from its seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from .algebra import AlgElement, Basis, Degree, Kind
from .cohomology import DerivationTable
from .laurent import LaurentPoly, RatFunc
from .tensor import Tensor2Element, Tensor3Element

__all__ = [
    "rand_coeff",
    "rand_basis",
    "rand_basis_of_degree",
    "rand_element",
    "rand_tensor2",
    "rand_tensor3",
    "rand_skew",
    "rand_homogeneous_tensor2",
    "rand_table",
]

_INDEXED = (Kind.E, Kind.F, Kind.G, Kind.H)


def _rand_laurent(rng: random.Random, terms: int, span: int, fractions: bool) -> LaurentPoly:
    out = {}
    for _ in range(terms):
        c = rng.choice((-3, -2, -1, 1, 2, 3))
        if fractions and rng.random() < 0.3:
            c = Fraction(c, rng.choice((2, 3, 5)))
        out[rng.randint(-span, span)] = c
    return LaurentPoly(out)


def rand_coeff(rng: random.Random, max_terms: int = 2, span: int = 3,
               fractions: bool = True, denominators: bool = False) -> RatFunc:
    """A nonzero RatFunc; with ``denominators`` it is sometimes a genuine fraction."""
    while True:
        num = _rand_laurent(rng, rng.randint(1, max_terms), span, fractions)
        if num.is_zero():
            continue
        c = RatFunc(num)
        if denominators and rng.random() < 0.4:
            den = _rand_laurent(rng, 2, 2, False)
            if not den.is_zero():
                c = c / RatFunc(den)
        return c


def rand_basis(rng: random.Random, radius: int, derivations: bool = True) -> Basis:
    kinds = list(Kind) if derivations else [Kind.D] + list(_INDEXED)
    while True:
        kind = rng.choice(kinds)
        if kind not in _INDEXED:
            return Basis(kind)
        m1, m2 = rng.randint(-radius, radius), rng.randint(-radius, radius)
        if kind in (Kind.G, Kind.H) and m1 == 0 and m2 == 0:
            continue
        return Basis(kind, m1, m2)


def rand_basis_of_degree(rng: random.Random, m: Degree, derivations: bool = True) -> Basis:
    if m == (0, 0):
        pool = [Kind.E, Kind.F, Kind.D] + ([Kind.D1, Kind.D2] if derivations else [])
        kind = rng.choice(pool)
        return Basis(kind, 0, 0)
    return Basis(rng.choice(_INDEXED), m[0], m[1])


def rand_element(rng: random.Random, radius: int, terms: int = 3, derivations: bool = True,
                 denominators: bool = False) -> AlgElement:
    return AlgElement(
        (rand_basis(rng, radius, derivations), rand_coeff(rng, denominators=denominators))
        for _ in range(rng.randint(1, terms))
    )


def rand_tensor2(rng: random.Random, radius: int, terms: int = 3, denominators: bool = False) -> Tensor2Element:
    return Tensor2Element(
        ((rand_basis(rng, radius), rand_basis(rng, radius)), rand_coeff(rng, denominators=denominators))
        for _ in range(rng.randint(1, terms))
    )


def rand_tensor3(rng: random.Random, radius: int, terms: int = 3, denominators: bool = False) -> Tensor3Element:
    return Tensor3Element(
        ((rand_basis(rng, radius), rand_basis(rng, radius), rand_basis(rng, radius)),
         rand_coeff(rng, denominators=denominators))
        for _ in range(rng.randint(1, terms))
    )


def rand_skew(rng: random.Random, radius: int, terms: int = 2) -> Tensor2Element:
    """sum c (a⊗b - b⊗a); zero only if every draw had a == b."""
    acc = Tensor2Element.zero()
    for _ in range(rng.randint(1, terms)):
        a, b = rand_basis(rng, radius), rand_basis(rng, radius)
        if a == b:
            continue
        c = rand_coeff(rng)
        acc = acc + Tensor2Element({(a, b): c, (b, a): -c})
    return acc


def _in_window(m: Degree, radius: int) -> bool:
    return abs(m[0]) <= radius and abs(m[1]) <= radius


def rand_homogeneous_tensor2(rng: random.Random, radius: int, degree: Degree, terms: int = 3) -> Tensor2Element:
    """Nonzero, homogeneous of ``degree``, every index inside the window."""
    while True:
        acc = {}
        for _ in range(rng.randint(1, terms)):
            while True:
                a = (rng.randint(-radius, radius), rng.randint(-radius, radius))
                b = (degree[0] - a[0], degree[1] - a[1])
                if _in_window(b, radius):
                    break
            key = (rand_basis_of_degree(rng, a), rand_basis_of_degree(rng, b))
            acc[key] = rand_coeff(rng)
        t = Tensor2Element(acc)
        if t:
            return t


def rand_table(rng: random.Random, radius: int, assignments: int = 3) -> DerivationTable:
    out = {}
    for _ in range(rng.randint(0, assignments)):
        out[rand_basis(rng, radius)] = rand_tensor2(rng, radius, denominators=True) if rng.random() < 0.8 \
            else Tensor2Element.zero()
    return DerivationTable(out, radius)
