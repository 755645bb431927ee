"""JSON file formats for elements, tensors and derivation tables.

Element::

    {"terms":[{"kind":"e","index":[1,0],"coeff":"q^2"},{"kind":"d1","coeff":"1"}]}

Tensor (``"mid"`` present for triples)::

    {"terms":[{"left":{"kind":"e","index":[0,0]},"right":{"kind":"d"},"coeff":"1"}]}

Derivation table::

    {"window":2,"assignments":[{"basis":{"kind":"d1"},"image":{"terms":[...]}}]}

Serialization is canonical (terms in basis order, compact separators), so
``dump_*(parse_*(text)) == text`` for any text this module produced.  Every
parse error carries the 1-based line and column of the offending token,
including errors inside coefficient strings.
"""

from __future__ import annotations

import json
import json.decoder
import json.scanner
from typing import Dict, Optional, Tuple, Union

from .algebra import KIND_BY_NAME, AlgElement, Basis, Kind
from .cohomology import DerivationTable
from .laurent import ParseError, RatFunc, parse_ratfunc
from .linear import accumulate
from .tensor import Tensor2Element, Tensor3Element

__all__ = [
    "FormatError",
    "basis_to_json",
    "element_to_json",
    "tensor_to_json",
    "table_to_json",
    "dump_element",
    "dump_tensor",
    "dump_table",
    "dump_value",
    "parse_element",
    "parse_tensor",
    "parse_table",
]


class FormatError(ValueError):
    """Malformed input file.  ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__("line %d, column %d: %s" % (line, column, message))
        self.reason = message
        self.line = line
        self.column = column


# -- serialization -------------------------------------------------------------


def basis_to_json(b: Basis) -> dict:
    if b.has_index:
        return {"kind": b.name, "index": [b.m1, b.m2]}
    return {"kind": b.name}


def element_to_json(x: AlgElement) -> dict:
    terms = []
    for b, c in x.sorted_items():
        t = basis_to_json(b)
        t["coeff"] = c.to_text()
        terms.append(t)
    return {"terms": terms}


_SLOTS = {2: ("left", "right"), 3: ("left", "mid", "right")}


def tensor_to_json(t: Union[Tensor2Element, Tensor3Element]) -> dict:
    terms = []
    for key, c in t.sorted_items():
        row = {name: basis_to_json(b) for name, b in zip(_SLOTS[len(key)], key)}
        row["coeff"] = c.to_text()
        terms.append(row)
    return {"terms": terms}


def table_to_json(t: DerivationTable) -> dict:
    return {
        "window": t.window,
        "assignments": [
            {"basis": basis_to_json(b), "image": tensor_to_json(img)}
            for b, img in sorted(t.assignments.items())
        ],
    }


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def dump_element(x: AlgElement) -> str:
    return _dumps(element_to_json(x))


def dump_tensor(t) -> str:
    return _dumps(tensor_to_json(t))


def dump_table(t: DerivationTable) -> str:
    return _dumps(table_to_json(t))


def dump_value(v) -> dict:
    """JSON-ready form of any value this package computes (used in reports)."""
    if isinstance(v, AlgElement):
        return element_to_json(v)
    if isinstance(v, (Tensor2Element, Tensor3Element)):
        return tensor_to_json(v)
    if isinstance(v, DerivationTable):
        return table_to_json(v)
    if isinstance(v, Basis):
        return basis_to_json(v)
    if isinstance(v, RatFunc):
        return v.to_text()
    if isinstance(v, dict):
        return {str(k): dump_value(w) for k, w in v.items()}
    if isinstance(v, (list, tuple)):
        return [dump_value(w) for w in v]
    return v


# -- position-aware JSON loading -----------------------------------------------
# The pure-Python scanner lets us wrap the string/object/array parsers so that
# every decoded container and string remembers where it started.


class _PStr(str):
    pos = 0


class _PDict(dict):
    pos = 0


class _PList(list):
    pos = 0


def _parse_string(s, end, strict):
    val, new_end = json.decoder.scanstring(s, end, strict)
    out = _PStr(val)
    out.pos = end - 1
    return out, new_end


def _make_decoder(text: str):
    dec = json.JSONDecoder()

    def parse_object(s_and_end, strict, scan_once, object_hook, object_pairs_hook, memo=None):
        start = s_and_end[1] - 1
        pairs, end = json.decoder.JSONObject(s_and_end, strict, scan_once, None, list, memo)
        out = _PDict()
        for k, v in pairs:
            if k in out:
                raise FormatError("duplicate key %r" % k, *_locate(text, start))
            out[k] = v
        out.pos = start
        return out, end

    def parse_array(s_and_end, scan_once):
        start = s_and_end[1] - 1
        vals, end = json.decoder.JSONArray(s_and_end, scan_once)
        out = _PList(vals)
        out.pos = start
        return out, end

    dec.parse_object = parse_object
    dec.parse_array = parse_array
    dec.parse_string = _parse_string
    dec.memo = {}
    dec.scan_once = json.scanner.py_make_scanner(dec)
    return dec


def _locate(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


class _Reader:
    def __init__(self, text: str):
        self.text = text
        try:
            self.root = _make_decoder(text).decode(text)
        except json.JSONDecodeError as exc:
            raise FormatError(exc.msg, exc.lineno, exc.colno) from None

    def fail(self, node, message: str, offset: int = 0):
        pos = getattr(node, "pos", 0) + offset
        raise FormatError(message, *_locate(self.text, pos))

    def obj(self, node, what: str, required, optional=()) -> dict:
        if not isinstance(node, dict):
            self.fail(node, "%s must be a JSON object" % what)
        for k in node:
            if k not in required and k not in optional:
                self.fail(node, "unexpected key %r in %s" % (k, what))
        for k in required:
            if k not in node:
                self.fail(node, "missing key %r in %s" % (k, what))
        return node

    def array(self, node, what: str, parent=None) -> list:
        if not isinstance(node, list):
            self.fail(node if hasattr(node, "pos") else parent, "%s must be a JSON array" % what)
        return node

    def basis(self, node, what: str = "basis", extra=()) -> Optional[Basis]:
        """A Basis, or None for the g/h-at-origin convention (zero)."""
        self.obj(node, what, ("kind",) + tuple(extra), ("index",))
        kind_name = node["kind"]
        if not isinstance(kind_name, str) or kind_name not in KIND_BY_NAME:
            self.fail(kind_name if isinstance(kind_name, _PStr) else node,
                      "unknown kind %r" % (kind_name,))
        kind = KIND_BY_NAME[kind_name]
        if kind in (Kind.D, Kind.D1, Kind.D2):
            if "index" in node:
                self.fail(node, "%s takes no index" % kind_name)
            return Basis(kind)
        if "index" not in node:
            self.fail(node, "%s requires an index" % kind_name)
        idx = node["index"]
        if (not isinstance(idx, list) or len(idx) != 2
                or any(type(v) is not int for v in idx)):
            self.fail(idx if isinstance(idx, _PList) else node, "index must be a pair of integers")
        m1, m2 = idx
        if kind in (Kind.G, Kind.H) and m1 == 0 and m2 == 0:
            return None
        return Basis(kind, m1, m2)

    def coeff(self, node, holder) -> RatFunc:
        if not isinstance(node, str):
            self.fail(holder, "coeff must be a string")
        try:
            return parse_ratfunc(node)
        except ParseError as exc:
            # +1 skips the opening quote; columns are 1-based
            self.fail(node, "bad coefficient: %s" % exc.reason, exc.column)

    def element(self, node) -> AlgElement:
        self.obj(node, "element", ("terms",))
        acc: Dict = {}
        for term in self.array(node["terms"], "terms", node):
            b = self.basis(term, "term", ("coeff",))
            c = self.coeff(term["coeff"], term)
            if b is not None:
                accumulate(acc, b, c)
        return AlgElement._raw(acc)

    def tensor(self, node, arity: Optional[int] = None):
        self.obj(node, "tensor", ("terms",))
        acc: Dict = {}
        for term in self.array(node["terms"], "terms", node):
            this = 3 if isinstance(term, dict) and "mid" in term else 2
            if arity is None:
                arity = this
            elif arity != this:
                self.fail(term, "expected a %d-fold tensor term" % arity)
            slots = _SLOTS[arity]
            self.obj(term, "tensor term", slots + ("coeff",))
            key = tuple(self.basis(term[s], s) for s in slots)
            c = self.coeff(term["coeff"], term)
            if None not in key:
                accumulate(acc, key, c)
        cls = Tensor3Element if arity == 3 else Tensor2Element
        return cls._raw(acc)

    def table(self, node) -> DerivationTable:
        self.obj(node, "table", ("window", "assignments"))
        window = node["window"]
        if type(window) is not int or window < 0:
            self.fail(node, "window must be a nonnegative integer")
        out = {}
        for row in self.array(node["assignments"], "assignments", node):
            self.obj(row, "assignment", ("basis", "image"))
            b = self.basis(row["basis"])
            if b is None:
                self.fail(row["basis"], "g/h at index (0,0) is not a basis vector")
            if b in out:
                self.fail(row, "duplicate assignment for %s" % (b,))
            out[b] = self.tensor(row["image"], 2)
        return DerivationTable(out, window)


def parse_element(text: str) -> AlgElement:
    r = _Reader(text)
    return r.element(r.root)


def parse_tensor(text: str, arity: Optional[int] = None):
    """Tensor2Element or Tensor3Element; an empty term list gives arity 2 unless told otherwise."""
    r = _Reader(text)
    return r.tensor(r.root, arity)


def parse_table(text: str) -> DerivationTable:
    r = _Reader(text)
    return r.table(r.root)
