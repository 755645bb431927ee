"""Sparse RatFunc-linear combinations over a hashable, orderable key set.

:class:`LinComb` is the common base of algebra elements and tensors.  Values
are immutable; a zero coefficient is never stored.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Tuple

from .laurent import ONE, RatFunc, as_ratfunc

__all__ = ["LinComb", "accumulate"]


def accumulate(acc: Dict, key, coef: RatFunc) -> None:
    """acc[key] += coef, dropping the entry if it cancels."""
    old = acc.get(key)
    if old is None:
        if not coef.is_zero():
            acc[key] = coef
        return
    new = old + coef
    if new.is_zero():
        del acc[key]
    else:
        acc[key] = new


class LinComb:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        acc: Dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                accumulate(acc, self._check_key(key), as_ratfunc(c))
        self._terms = acc
        self._hash = None

    @classmethod
    def _check_key(cls, key):
        return key

    @classmethod
    def _raw(cls, terms: Dict):
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def from_key(cls, key, coef=ONE):
        coef = as_ratfunc(coef)
        return cls._raw({} if coef.is_zero() else {cls._check_key(key): coef})

    # -- access --------------------------------------------------------------

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key) -> RatFunc:
        return self._terms.get(key, as_ratfunc(0))

    def sorted_items(self) -> Iterable[Tuple[object, RatFunc]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- vector space --------------------------------------------------------

    def _same(self, other):
        if type(other) is not type(self):
            if isinstance(other, int) and other == 0:
                return type(self).zero()
            raise TypeError("cannot combine %s with %s" % (type(self).__name__, type(other).__name__))
        return other

    def __add__(self, other):
        other = self._same(other)
        big, small = (self, other) if len(self) >= len(other) else (other, self)
        acc = dict(big._terms)
        for k, c in small._terms.items():
            accumulate(acc, k, c)
        return type(self)._raw(acc)

    def __radd__(self, other):
        # lets sum() start from 0
        return self.__add__(other)

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._same(other))

    def scale(self, c):
        c = as_ratfunc(c)
        if c.is_zero():
            return type(self).zero()
        if c == ONE:
            return self
        return type(self)._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, c):
        if isinstance(c, LinComb):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(as_ratfunc(c).inverse())

    def __eq__(self, other) -> bool:
        if type(other) is type(self):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- display -------------------------------------------------------------

    @staticmethod
    def _key_text(key) -> str:
        return str(key)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.sorted_items():
            ks = self._key_text(k)
            if c == ONE:
                s = ks
            elif c == -ONE:
                s = "-" + ks
            else:
                s = "(%s)*%s" % (c.to_text(), ks)
            if parts and not s.startswith("-"):
                s = "+" + s
            parts.append(s)
        return " ".join(parts).replace(" +", " + ").replace(" -", " - ")

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self.to_text())
