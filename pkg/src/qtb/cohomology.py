"""Derivations from the algebra into its tensor square, restricted to a window.

A :class:`DerivationTable` records the image of finitely many basis vectors.
The window radius bounds which vectors are enumerated; arithmetic is never
truncated, and evaluating a table on a vector it does not know raises
:class:`OutOfWindow` rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .algebra import AlgElement, Basis, Degree, Kind, bracket_basis, window_basis
from .bialgebra import DEFAULT_PROBES
from .laurent import as_ratfunc
from .tensor import Tensor2Element, act2, homogeneous_parts, tensor_degree

__all__ = [
    "OutOfWindow",
    "ZeroDegree",
    "DerivationTable",
    "Probe",
    "inner_derivation",
    "homogeneous_component",
    "leibniz_defect",
    "leibniz_failures",
    "pick_probe",
    "reduce_to_inner",
    "agreement_report",
    "windowed_faithfulness",
]


class OutOfWindow(KeyError):
    """A required basis vector has no assignment in the table."""


class ZeroDegree(ValueError):
    """Degree (0, 0) where a nonzero degree is required."""


class DerivationTable:
    """Finite map basis vector -> Tensor2Element, with its window radius."""

    __slots__ = ("_assign", "window")

    def __init__(self, assignments: Mapping[Basis, Tensor2Element], window: int):
        self._assign = MappingProxyType(dict(assignments))
        self.window = int(window)

    @property
    def assignments(self) -> Mapping[Basis, Tensor2Element]:
        return self._assign

    def image(self, b: Basis) -> Tensor2Element:
        try:
            return self._assign[b]
        except KeyError:
            raise OutOfWindow("no assignment for %s (window %d)" % (b, self.window)) from None

    def __call__(self, x: AlgElement) -> Tensor2Element:
        out = Tensor2Element.zero()
        for b, c in x.items():
            out = out + self.image(b).scale(c)
        return out

    def __contains__(self, b) -> bool:
        return b in self._assign

    def __eq__(self, other) -> bool:
        if not isinstance(other, DerivationTable):
            return NotImplemented
        return self.window == other.window and dict(self._assign) == dict(other._assign)

    def __add__(self, other: "DerivationTable") -> "DerivationTable":
        keys = set(self._assign) | set(other._assign)
        z = Tensor2Element.zero()
        return DerivationTable(
            {b: self._assign.get(b, z) + other._assign.get(b, z) for b in keys},
            max(self.window, other.window),
        )

    def is_zero(self) -> bool:
        return all(t.is_zero() for t in self._assign.values())

    def degrees(self) -> set:
        """Offsets m such that some image has a component of degree deg(x) + m."""
        out = set()
        for b, t in self._assign.items():
            n1, n2 = b.degree
            for key in t.keys():
                s1, s2 = tensor_degree(key)
                out.add((s1 - n1, s2 - n2))
        return out

    def __repr__(self):
        nz = sum(1 for t in self._assign.values() if t)
        return "DerivationTable(window=%d, %d assignments, %d nonzero)" % (
            self.window, len(self._assign), nz)


@dataclass(frozen=True)
class Probe:
    """rho = rho1 * d1 + rho2 * d2, acting on degree m by m1*rho1 + m2*rho2."""

    rho1: Fraction
    rho2: Fraction

    def pairing(self, m: Degree) -> Fraction:
        return m[0] * self.rho1 + m[1] * self.rho2

    @property
    def element(self) -> AlgElement:
        return AlgElement({Basis(Kind.D1): self.rho1, Basis(Kind.D2): self.rho2})


def inner_derivation(v: Tensor2Element, window: int, basis: Optional[Iterable[Basis]] = None) -> DerivationTable:
    """The table x -> x . v on every basis vector of the window."""
    vecs = window_basis(window) if basis is None else basis
    return DerivationTable({b: act2(AlgElement.from_key(b), v) for b in vecs}, window)


def homogeneous_component(t: DerivationTable, m: Degree) -> DerivationTable:
    out = {}
    for b, img in t.assignments.items():
        n1, n2 = b.degree
        target = (n1 + m[0], n2 + m[1])
        out[b] = homogeneous_parts(img).get(target, Tensor2Element.zero())
    return DerivationTable(out, t.window)


def leibniz_defect(t: DerivationTable, x: Basis, y: Basis) -> Tensor2Element:
    """t([x, y]) - x . t(y) + y . t(x)."""
    bxy = AlgElement._raw(dict(bracket_basis(x, y)))
    return t(bxy) - act2(AlgElement.from_key(x), t.image(y)) + act2(AlgElement.from_key(y), t.image(x))


def leibniz_failures(t: DerivationTable, pairs: Optional[Iterable[Tuple[Basis, Basis]]] = None) -> List[Tuple[Basis, Basis, Tensor2Element]]:
    """Pairs of assigned vectors (whose bracket is also covered) with nonzero defect."""
    keys = sorted(t.assignments)
    if pairs is None:
        pairs = ((x, y) for i, x in enumerate(keys) for y in keys[i + 1:])
    bad = []
    for x, y in pairs:
        if any(k not in t for k, _ in bracket_basis(x, y)):
            continue
        dfx = leibniz_defect(t, x, y)
        if dfx:
            bad.append((x, y, dfx))
    return bad


def pick_probe(k: Degree) -> Probe:
    """d1 if k1 != 0, else d2."""
    if k[0]:
        return Probe(Fraction(1), Fraction(0))
    if k[1]:
        return Probe(Fraction(0), Fraction(1))
    raise ZeroDegree("no probe pairs nontrivially with degree (0, 0)")


def reduce_to_inner(t: DerivationTable, degree: Optional[Degree] = None) -> Tensor2Element:
    """The tensor v with v_inn = t, for t homogeneous of nonzero degree.

    Uses v = t(rho) / rho(k) for the probe rho of :func:`pick_probe`.  When
    ``degree`` is omitted it is read off the table; a zero table then gives 0.
    """
    if degree is None:
        degs = t.degrees()
        if not degs:
            return Tensor2Element.zero()
        if len(degs) > 1:
            raise ValueError("table is not homogeneous: degrees %s" % sorted(degs))
        (degree,) = degs
    degree = tuple(degree)
    rho = pick_probe(degree)
    image = t(rho.element)
    return image.scale(as_ratfunc(1) / as_ratfunc(rho.pairing(degree)))


def agreement_report(t: DerivationTable, v: Tensor2Element) -> Dict[Basis, bool]:
    """For each assigned vector x: does x . v equal t(x)?"""
    return {b: act2(AlgElement.from_key(b), v) == img for b, img in sorted(t.assignments.items())}


def windowed_faithfulness(v: Tensor2Element, probes: Sequence[AlgElement] = DEFAULT_PROBES) -> Optional[AlgElement]:
    """A probe x with x . v != 0, or None (always None for v = 0)."""
    if v.is_zero():
        return None
    for x in probes:
        if not act2(x, v).is_zero():
            return x
    return None
