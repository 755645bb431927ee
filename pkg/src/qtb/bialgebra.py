"""Coboundary Lie bialgebra structures: Delta_r, c(r) and the axiom checks.

For ``r = sum_i a_i ⊗ b_i`` the Yang-Baxter element lives in the Lie algebra's
tensor cube::

    c(r) = sum_ij [a_i, a_j] ⊗ b_i ⊗ b_j
         + sum_ij a_i ⊗ [b_i, a_j] ⊗ b_j
         + sum_ij a_i ⊗ a_j ⊗ [b_i, b_j]

Each bracket in ``[r12, r13] + [r12, r23] + [r13, r23]`` meets one unit slot, so
no model of the enveloping algebra is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Sequence

from .algebra import AlgElement, Basis, Kind, bracket, bracket_basis, d, d1, d2, e, f, g, h
from .linear import accumulate
from .tensor import Tensor2Element, Tensor3Element, act2, act3, cyclic, is_skew

__all__ = [
    "RMatrix",
    "DEFAULT_PROBES",
    "delta_r",
    "c_of_r",
    "check_cybe",
    "one_tensor_delta",
    "cojacobi_defect",
    "cojacobi_gap",
    "compatibility_defect",
    "mybe_witness",
]

# generators used throughout the degree-zero arguments, plus d1, d2
DEFAULT_PROBES = (d1, d2, d, e(0, 0), f(0, 0), g(0, 1), h(1, 0), g(0, -1), h(-1, 0))


@dataclass(frozen=True)
class RMatrix:
    """A tensor r used as a coboundary.  Skewness is checked lazily."""

    value: Tensor2Element
    _skew: Optional[bool] = field(default=None, compare=False, repr=False)

    @property
    def skew(self) -> bool:
        if self._skew is None:
            object.__setattr__(self, "_skew", is_skew(self.value))
        return self._skew


def _value(r) -> Tensor2Element:
    return r.value if isinstance(r, RMatrix) else r


def delta_r(r, x: AlgElement) -> Tensor2Element:
    """The coboundary cobracket x -> x . r."""
    return act2(x, _value(r))


def c_of_r(r) -> Tensor3Element:
    terms = list(_value(r).items())
    acc: Dict = {}
    for (ai, bi), ci in terms:
        for (aj, bj), cj in terms:
            w = ci * cj
            for k, s in bracket_basis(ai, aj):
                accumulate(acc, (k, bi, bj), w * s)
            for k, s in bracket_basis(bi, aj):
                accumulate(acc, (ai, k, bj), w * s)
            for k, s in bracket_basis(bi, bj):
                accumulate(acc, (ai, aj, k), w * s)
    return Tensor3Element._raw(acc)


def check_cybe(r) -> bool:
    return c_of_r(r).is_zero()


def one_tensor_delta(r, t: Tensor2Element) -> Tensor3Element:
    """(1 ⊗ Delta_r)(a ⊗ b) = a ⊗ Delta_r(b)."""
    acc: Dict = {}
    cache: Dict[Basis, Tensor2Element] = {}
    rv = _value(r)
    for (a, b), c in t.items():
        db = cache.get(b)
        if db is None:
            db = cache[b] = act2(AlgElement.from_key(b), rv)
        for (u, v), cu in db.items():
            accumulate(acc, (a, u, v), c * cu)
    return Tensor3Element._raw(acc)


def cojacobi_defect(r, x: AlgElement) -> Tensor3Element:
    """(1 + xi + xi^2)(1 ⊗ Delta_r) Delta_r(x), computed from Delta_r and xi only."""
    t = one_tensor_delta(r, delta_r(r, x))
    t1 = cyclic(t)
    return t + t1 + cyclic(t1)


def cojacobi_gap(r, x: AlgElement) -> Tensor3Element:
    """cojacobi_defect(r, x) - x . c(r); zero for skew r."""
    return cojacobi_defect(r, x) - act3(x, c_of_r(r))


def compatibility_defect(r, x: AlgElement, y: AlgElement) -> Tensor2Element:
    """Delta_r([x, y]) - x . Delta_r(y) + y . Delta_r(x)."""
    return delta_r(r, bracket(x, y)) - act2(x, delta_r(r, y)) + act2(y, delta_r(r, x))


def mybe_witness(r, probes: Sequence[AlgElement] = DEFAULT_PROBES) -> Optional[AlgElement]:
    """A probe x with x . c(r) != 0, or None.

    None is inconclusive: a finite probe set cannot prove the modified
    Yang-Baxter equation, while a witness does disprove c(r) = 0.
    """
    probes = list(probes)
    if not probes:
        raise ValueError("probe set must be nonempty")
    c = c_of_r(r)
    if c.is_zero():
        return None
    for x in probes:
        if not act3(x, c).is_zero():
            return x
    return None
