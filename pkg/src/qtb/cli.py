"""Command-line entry point: ``qtb`` or ``python -m qtb``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage or
input errors (parse errors name the line and column).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, List, Optional

from . import verify as V
from .algebra import AlgElement
from .bialgebra import DEFAULT_PROBES, c_of_r, delta_r, mybe_witness
from .cohomology import OutOfWindow, ZeroDegree, agreement_report, reduce_to_inner, windowed_faithfulness
from .formats import FormatError, dump_value, parse_element, parse_table, parse_tensor, tensor_to_json
from .identities import SUITES
from .report import VerifyReport
from .tensor import is_skew

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError("cannot read %s: %s" % (path, exc.strerror or exc)) from None


def _load(path: str, parser: Callable):
    text = _read(path)
    try:
        return parser(text)
    except FormatError as exc:
        raise _InputError("%s: %s" % (path, exc)) from None


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def _emit(args, doc: dict, text_lines: List[str]) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


# -- subcommands ---------------------------------------------------------------


def _cmd_verify(args) -> int:
    check = args.check
    if check != "identities" and args.suite is not None:
        raise _InputError("--suite only applies to 'verify identities'")
    r = args.radius
    runners = {
        "jacobi": lambda: V.verify_jacobi(r),
        "oracle": lambda: V.verify_oracle(r),
        "module-axioms": lambda: V.verify_module_axioms(r, args.samples or 1000, args.seed),
        "identities": lambda: V.verify_identities(r, args.suite, args.seed),
        "bialgebra-axioms": lambda: V.verify_bialgebra_axioms(r, args.seed),
        "inner-roundtrip": lambda: V.verify_inner_roundtrip(r, args.samples or 200, args.seed),
        "faithfulness": lambda: V.verify_faithfulness(r, args.samples or 500, args.seed),
        "serialization": lambda: V.verify_serialization(r, args.samples or 1000, args.seed),
    }
    report: VerifyReport = runners[check]()
    if args.format == "json":
        print(report.dumps())
    else:
        print(report.summary())
    return report.exit_code


def _cmd_cybe(args) -> int:
    r = _load(args.file, lambda s: parse_tensor(s, 2))
    c = c_of_r(r)
    skew = is_skew(r)
    if c.is_zero():
        _emit(args, {"cybe": True, "skew": skew, "c_of_r": tensor_to_json(c)},
              ["CYBE holds: c(r) = 0", "r is %sskew" % ("" if skew else "not ")])
        return EXIT_OK
    witness = mybe_witness(r, DEFAULT_PROBES)
    if witness is None:
        note = "no default probe detects c(r); this is inconclusive for MYBE"
    else:
        note = "MYBE fails: x = %s gives x.c(r) != 0" % witness.to_text()
    _emit(args, {"cybe": False, "skew": skew, "c_of_r": tensor_to_json(c),
                 "mybe_witness": None if witness is None else dump_value(witness), "note": note},
          ["CYBE fails; c(r) =", _dump(tensor_to_json(c)), note])
    return EXIT_FAIL


def _cmd_delta(args) -> int:
    r = _load(args.r, lambda s: parse_tensor(s, 2))
    x = _load(args.x, parse_element)
    out = tensor_to_json(delta_r(r, x))
    print(_dump(out) if args.format == "text" else json.dumps(out, indent=2))
    return EXIT_OK


def _cmd_reduce(args) -> int:
    t = _load(args.file, parse_table)
    try:
        v = reduce_to_inner(t)
    except ZeroDegree as exc:
        raise _InputError("degree-zero tables are not reduced automatically: %s" % exc) from None
    except OutOfWindow as exc:
        raise _InputError("table lacks the probe needed for the reduction: %s" % exc.args[0]) from None
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    agree = agreement_report(t, v)
    bad = [b for b, ok in agree.items() if not ok]
    lines = ["v = " + _dump(tensor_to_json(v)),
             "agreement: %d of %d assigned basis vectors satisfy x.v = t(x)" % (len(agree) - len(bad), len(agree))]
    lines += ["  mismatch at %s" % (b,) for b in bad]
    _emit(args, {"v": tensor_to_json(v), "agreement": [
        {"basis": dump_value(b), "agrees": ok} for b, ok in agree.items()]}, lines)
    return EXIT_OK if not bad else EXIT_FAIL


def _cmd_faithfulness(args) -> int:
    v = _load(args.file, lambda s: parse_tensor(s, 2))
    if v.is_zero():
        _emit(args, {"zero": True, "witness": None}, ["v = 0: nothing to detect"])
        return EXIT_OK
    w = windowed_faithfulness(v, DEFAULT_PROBES)
    if w is None:
        _emit(args, {"zero": False, "witness": None},
              ["no probe in the default set acts nontrivially on v"])
        return EXIT_FAIL
    _emit(args, {"zero": False, "witness": dump_value(w)}, ["witness: x = %s" % w.to_text()])
    return EXIT_OK


def _cmd_demo(args) -> int:
    report = V.demo_triangular(args.radius)
    if args.format == "json":
        print(report.dumps())
    else:
        print("r = d⊗e(0,0) - e(0,0)⊗d")
        print("c(r) = %s" % c_of_r(V.R_DE).to_text())
        print(report.summary())
    return report.exit_code


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtb", description="Exact checks for sl2 over the quantum torus.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("check", choices=("jacobi", "oracle", "module-axioms", "identities", "bialgebra-axioms",
                                     "inner-roundtrip", "faithfulness", "serialization"))
    v.add_argument("--radius", type=int, default=V.DEFAULT_RADIUS)
    v.add_argument("--seed", type=int, default=V.DEFAULT_SEED)
    v.add_argument("--suite", choices=sorted(SUITES))
    v.add_argument("--samples", type=int, default=None)
    fmt(v)
    v.set_defaults(func=_cmd_verify)

    c = sub.add_parser("cybe", help="check the classical Yang-Baxter equation for r")
    c.add_argument("file")
    fmt(c)
    c.set_defaults(func=_cmd_cybe)

    dl = sub.add_parser("delta", help="print Delta_r(x) = x.r")
    dl.add_argument("r")
    dl.add_argument("x")
    fmt(dl)
    dl.set_defaults(func=_cmd_delta)

    rd = sub.add_parser("reduce-derivation", help="reduce a homogeneous nonzero-degree table to inner form")
    rd.add_argument("file")
    fmt(rd)
    rd.set_defaults(func=_cmd_reduce)

    fa = sub.add_parser("faithfulness", help="find a probe acting nontrivially on a tensor")
    fa.add_argument("file")
    fmt(fa)
    fa.set_defaults(func=_cmd_faithfulness)

    de = sub.add_parser("demo", help="worked examples")
    de.add_argument("name", choices=("triangular",))
    de.add_argument("--radius", type=int, default=2)
    fmt(de)
    de.set_defaults(func=_cmd_demo)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "radius", 0) is not None and getattr(args, "radius", 0) < 0:
        print("qtb: error: radius must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except _InputError as exc:
        print("qtb: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
