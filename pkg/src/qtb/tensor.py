"""Tensor square and cube of the algebra under the diagonal adjoint action."""

from __future__ import annotations

from typing import Dict, Tuple

from .algebra import AlgElement, Basis, Degree, bracket_basis
from .laurent import RatFunc, as_ratfunc
from .linear import LinComb, accumulate

__all__ = [
    "Tensor2Element",
    "Tensor3Element",
    "otimes",
    "act",
    "act2",
    "act3",
    "twist",
    "cyclic",
    "is_skew",
    "skew_part",
    "tensor_degree",
    "homogeneous_parts",
]


def _check_basis(b):
    if not isinstance(b, Basis):
        raise TypeError("tensor slots must be Basis, got %r" % (b,))
    return b


class Tensor2Element(LinComb):
    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        a, b = key
        return (_check_basis(a), _check_basis(b))

    @staticmethod
    def _key_text(key) -> str:
        return "%s⊗%s" % key


class Tensor3Element(LinComb):
    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        a, b, c = key
        return (_check_basis(a), _check_basis(b), _check_basis(c))

    @staticmethod
    def _key_text(key) -> str:
        return "%s⊗%s⊗%s" % key


def otimes(*xs: AlgElement):
    """Tensor product of two or three algebra elements."""
    if len(xs) == 2:
        x, y = xs
        return Tensor2Element._raw(
            {(a, b): ca * cb for a, ca in x.items() for b, cb in y.items()}
        )
    if len(xs) == 3:
        x, y, z = xs
        return Tensor3Element._raw(
            {
                (a, b, c): ca * cb * cc
                for a, ca in x.items()
                for b, cb in y.items()
                for c, cc in z.items()
            }
        )
    raise ValueError("only tensor squares and cubes are supported")


def act2(x: AlgElement, t: Tensor2Element) -> Tensor2Element:
    """x . (a ⊗ b) = [x, a] ⊗ b + a ⊗ [x, b]."""
    acc: Dict[Tuple[Basis, Basis], RatFunc] = {}
    xs = list(x.items())
    for (a, b), c in t.items():
        for u, cu in xs:
            w = c * cu
            for k, s in bracket_basis(u, a):
                accumulate(acc, (k, b), w * s)
            for k, s in bracket_basis(u, b):
                accumulate(acc, (a, k), w * s)
    return Tensor2Element._raw(acc)


def act3(x: AlgElement, t: Tensor3Element) -> Tensor3Element:
    acc: Dict[Tuple[Basis, Basis, Basis], RatFunc] = {}
    xs = list(x.items())
    for (a, b, cc), c in t.items():
        for u, cu in xs:
            w = c * cu
            for k, s in bracket_basis(u, a):
                accumulate(acc, (k, b, cc), w * s)
            for k, s in bracket_basis(u, b):
                accumulate(acc, (a, k, cc), w * s)
            for k, s in bracket_basis(u, cc):
                accumulate(acc, (a, b, k), w * s)
    return Tensor3Element._raw(acc)


def act(x: AlgElement, t):
    if isinstance(t, Tensor2Element):
        return act2(x, t)
    if isinstance(t, Tensor3Element):
        return act3(x, t)
    raise TypeError("cannot act on %s" % type(t).__name__)


def twist(t: Tensor2Element) -> Tensor2Element:
    return Tensor2Element._raw({(b, a): c for (a, b), c in t.items()})


def cyclic(t: Tensor3Element) -> Tensor3Element:
    """a ⊗ b ⊗ c -> b ⊗ c ⊗ a."""
    return Tensor3Element._raw({(b, c, a): v for (a, b, c), v in t.items()})


def is_skew(t: Tensor2Element) -> bool:
    """Membership in Im(1 - twist), i.e. twist(t) == -t."""
    for (a, b), c in t.items():
        if (c + t.coefficient((b, a))).is_zero():
            continue
        return False
    return True


_HALF = as_ratfunc(1) / 2


def skew_part(t: Tensor2Element) -> Tensor2Element:
    return (t - twist(t)).scale(_HALF)


def tensor_degree(key) -> Degree:
    s1 = s2 = 0
    for b in key:
        m1, m2 = b.degree
        s1 += m1
        s2 += m2
    return (s1, s2)


def homogeneous_parts(t: LinComb) -> Dict[Degree, LinComb]:
    parts: Dict[Degree, Dict] = {}
    for key, c in t.items():
        parts.setdefault(tensor_degree(key), {})[key] = c
    return {deg: type(t)._raw(p) for deg, p in parts.items()}
