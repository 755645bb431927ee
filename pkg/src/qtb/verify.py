"""Verification drivers behind ``qtb verify`` and the acceptance suite.

Every driver returns a :class:`~qtb.report.VerifyReport`.  Randomized drivers
take an explicit seed.  ``QTB_THREADS`` caps the number of worker processes
used by the Jacobi enumeration (default 1, i.e. in-process).
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence

from .algebra import AlgElement, Basis, bracket, bracket_basis, d, d1, d2, e, f, window_basis
from .bialgebra import (DEFAULT_PROBES, c_of_r, check_cybe, cojacobi_defect, compatibility_defect,
                        delta_r)
from .cohomology import inner_derivation, reduce_to_inner, windowed_faithfulness
from .formats import (dump_element, dump_table, dump_tensor, dump_value, parse_element, parse_table,
                      parse_tensor)
from .identities import SUITES, run_identity_suite
from .laurent import ONE
from .linear import accumulate
from .report import Failure, VerifyReport
from .sampling import (rand_basis, rand_element, rand_homogeneous_tensor2, rand_skew, rand_table,
                       rand_tensor2, rand_tensor3)
from .tensor import Tensor2Element, Tensor3Element, act2, act3, is_skew, otimes
from .torus import embed, oracle_bracket, project

__all__ = [
    "DEFAULT_RADIUS",
    "DEFAULT_SEED",
    "thread_count",
    "verify_oracle",
    "verify_jacobi",
    "verify_module_axioms",
    "verify_identities",
    "verify_cojacobi",
    "verify_compatibility",
    "verify_image_axiom",
    "verify_cybe_instances",
    "verify_bialgebra_axioms",
    "demo_triangular",
    "verify_inner_roundtrip",
    "verify_faithfulness",
    "verify_serialization",
    "R_EF",
    "C_OF_R_EF",
]

DEFAULT_RADIUS = 3
DEFAULT_SEED = 20240101


def thread_count() -> int:
    try:
        n = int(os.environ.get("QTB_THREADS", "1"))
    except ValueError:
        return 1
    return max(1, n)


def _wedge(x: AlgElement, y: AlgElement) -> Tensor2Element:
    return otimes(x, y) - otimes(y, x)


E0, F0 = e(0, 0), f(0, 0)
R_D1D2 = _wedge(d1, d2)
R_DE = _wedge(d, E0)
R_EF = _wedge(E0, F0)
C_OF_R_EF = (otimes(d, E0, F0) - otimes(d, F0, E0) - otimes(E0, d, F0)
             + otimes(F0, d, E0) + otimes(E0, F0, d) - otimes(F0, E0, d))


class _Timer:
    def __init__(self, report: VerifyReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.wall_time += time.perf_counter() - self.t0
        return False


# -- structure constants -------------------------------------------------------


def verify_oracle(radius: int = DEFAULT_RADIUS) -> VerifyReport:
    """bracket vs. the matrix commutator for every ordered pair (d1, d2 excluded)."""
    report = VerifyReport("oracle")
    vecs = window_basis(radius, derivations=False)
    emb = {b: embed(b) for b in vecs}
    with _Timer(report):
        for a in vecs:
            for b in vecs:
                report.instances_checked += 1
                expected = project(oracle_bracket(emb[a], emb[b]))
                actual = AlgElement._raw(dict(bracket_basis(a, b)))
                if expected != actual:
                    report.failures.append(Failure("[%s, %s]" % (a, b), {"x": dump_value(a), "y": dump_value(b)},
                                                   dump_value(expected), dump_value(actual)))
    return report


def _jacobi_basis(x: Basis, y: Basis, z: Basis) -> Dict:
    acc: Dict = {}
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        for k, s in bracket_basis(b, c):
            for k2, s2 in bracket_basis(a, k):
                accumulate(acc, k2, s * s2)
    return acc


def _jacobi_chunk(args):
    radius, first = args
    vecs = window_basis(radius)
    bad = []
    count = 0
    for i in first:
        for j in range(i + 1, len(vecs)):
            for k in range(j + 1, len(vecs)):
                count += 1
                acc = _jacobi_basis(vecs[i], vecs[j], vecs[k])
                if acc:
                    bad.append((i, j, k, AlgElement._raw(acc)))
    return count, bad


def verify_jacobi(radius: int = 2) -> VerifyReport:
    """Antisymmetry on all pairs and the Jacobi identity on all triples of the window.

    Given antisymmetry the Jacobi defect is alternating, so triples with a
    repeated entry vanish automatically and one ordering per set suffices.
    """
    report = VerifyReport("jacobi")
    vecs = window_basis(radius)
    with _Timer(report):
        for a in vecs:
            for b in vecs:
                report.instances_checked += 1
                s = dict(bracket_basis(a, b))
                for k, c in bracket_basis(b, a):
                    accumulate(s, k, c)
                if s:
                    report.failures.append(Failure("antisymmetry [%s, %s]" % (a, b),
                                                   {"x": dump_value(a), "y": dump_value(b)},
                                                   {"terms": []}, dump_value(AlgElement._raw(s))))
        workers = thread_count()
        idx = list(range(len(vecs)))
        chunks = [(radius, idx[w::workers]) for w in range(workers)]
        if workers == 1:
            results = [_jacobi_chunk(chunks[0])]
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_jacobi_chunk, chunks))
        for count, bad in results:
            report.instances_checked += count
            for i, j, k, val in bad:
                x, y, z = vecs[i], vecs[j], vecs[k]
                report.failures.append(Failure("jacobi (%s, %s, %s)" % (x, y, z),
                                               {"x": dump_value(x), "y": dump_value(y), "z": dump_value(z)},
                                               {"terms": []}, dump_value(val)))
    return report


def verify_module_axioms(radius: int = DEFAULT_RADIUS, samples: int = 1000,
                         seed: int = DEFAULT_SEED) -> VerifyReport:
    """x.(y.t) - y.(x.t) = [x, y].t on the tensor square and cube."""
    report = VerifyReport("module-axioms")
    rng = random.Random(seed)
    with _Timer(report):
        for i in range(samples):
            x = rand_element(rng, radius, denominators=True)
            y = rand_element(rng, radius, denominators=True)
            for act, t in ((act2, rand_tensor2(rng, radius)), (act3, rand_tensor3(rng, radius))):
                report.instances_checked += 1
                lhs = act(bracket(x, y), t)
                rhs = act(x, act(y, t)) - act(y, act(x, t))
                if lhs != rhs:
                    report.failures.append(Failure("sample %d (%s)" % (i, act.__name__),
                                                   {"x": dump_value(x), "y": dump_value(y), "t": dump_value(t)},
                                                   dump_value(rhs), dump_value(lhs)))
    return report


def verify_identities(radius: int = DEFAULT_RADIUS, suite: Optional[str] = None,
                      seed: int = DEFAULT_SEED) -> VerifyReport:
    ids = [suite] if suite else list(SUITES)
    report = VerifyReport("identities" if suite is None else "identities/%s" % suite)
    for s in ids:
        sub = run_identity_suite(s, radius, seed)
        report.merge(sub)
        report.notes.append("%s: %d instances, %d failures" % (s, sub.instances_checked, len(sub.failures)))
    return report


# -- bialgebra -----------------------------------------------------------------


def _nonzero_skew(rng: random.Random, radius: int) -> Tensor2Element:
    while True:
        r = rand_skew(rng, radius)
        if r:
            return r


def verify_cojacobi(radius: int = 2, samples: int = 200, seed: int = DEFAULT_SEED,
                    probes: Sequence[AlgElement] = DEFAULT_PROBES) -> VerifyReport:
    """(1 + xi + xi^2)(1 ⊗ Delta_r) Delta_r(x) = x . c(r) for random skew r."""
    report = VerifyReport("cojacobi")
    rng = random.Random(seed)
    with _Timer(report):
        for i in range(samples):
            r = _nonzero_skew(rng, radius)
            c = c_of_r(r)
            for x in probes:
                report.instances_checked += 1
                lhs = cojacobi_defect(r, x)
                rhs = act3(x, c)
                if lhs != rhs:
                    report.failures.append(Failure("sample %d" % i, {"r": dump_value(r), "x": dump_value(x)},
                                                   dump_value(rhs), dump_value(lhs)))
    return report


def verify_compatibility(radius: int = 2, samples: int = 500, seed: int = DEFAULT_SEED) -> VerifyReport:
    report = VerifyReport("compatibility")
    rng = random.Random(seed)
    with _Timer(report):
        for i in range(samples):
            r = rand_tensor2(rng, radius)
            x = AlgElement.from_key(rand_basis(rng, radius))
            y = AlgElement.from_key(rand_basis(rng, radius))
            report.instances_checked += 1
            dfx = compatibility_defect(r, x, y)
            if dfx:
                report.failures.append(Failure("sample %d" % i,
                                               {"r": dump_value(r), "x": dump_value(x), "y": dump_value(y)},
                                               {"terms": []}, dump_value(dfx)))
    return report


def verify_image_axiom(radius: int = 2, samples: int = 100, seed: int = DEFAULT_SEED,
                       probes: Sequence[AlgElement] = DEFAULT_PROBES) -> VerifyReport:
    """Delta_r(x) is skew whenever r is."""
    report = VerifyReport("image-axiom")
    rng = random.Random(seed)
    with _Timer(report):
        for i in range(samples):
            r = _nonzero_skew(rng, radius)
            for x in probes:
                report.instances_checked += 1
                img = delta_r(r, x)
                if not is_skew(img):
                    report.failures.append(Failure("sample %d" % i, {"r": dump_value(r), "x": dump_value(x)},
                                                   "skew", dump_value(img)))
    return report


def verify_cybe_instances() -> VerifyReport:
    report = VerifyReport("cybe-instances")
    cases = [
        ("d1∧d2 satisfies CYBE", R_D1D2, Tensor3Element.zero()),
        ("d∧e0 satisfies CYBE", R_DE, Tensor3Element.zero()),
        ("e0∧f0 has the six-term c(r)", R_EF, C_OF_R_EF),
    ]
    with _Timer(report):
        for label, r, expected in cases:
            report.instances_checked += 1
            actual = c_of_r(r)
            if actual != expected or check_cybe(r) != expected.is_zero():
                report.failures.append(Failure(label, {"r": dump_value(r)}, dump_value(expected), dump_value(actual)))
    return report


def verify_bialgebra_axioms(radius: int = 2, seed: int = DEFAULT_SEED) -> VerifyReport:
    report = VerifyReport("bialgebra-axioms")
    for sub in (verify_cybe_instances(), verify_cojacobi(radius, seed=seed),
                verify_compatibility(radius, seed=seed), verify_image_axiom(radius, seed=seed)):
        report.merge(sub)
        report.notes.append("%s: %d instances, %d failures" % (sub.suite, sub.instances_checked, len(sub.failures)))
    return report


def demo_triangular(radius: int = 2) -> VerifyReport:
    """r = d⊗e0 - e0⊗d: skew, CYBE, skew cobracket and zero co-Jacobi defect on the window."""
    report = VerifyReport("demo-triangular")
    r = R_DE
    with _Timer(report):
        report.instances_checked += 2
        if not is_skew(r):
            report.failures.append(Failure("r is skew", {"r": dump_value(r)}, "skew", dump_value(r)))
        c = c_of_r(r)
        if c:
            report.failures.append(Failure("c(r) = 0", {"r": dump_value(r)}, {"terms": []}, dump_value(c)))
        for b in window_basis(radius):
            x = AlgElement.from_key(b)
            img = delta_r(r, x)
            report.instances_checked += 2
            if not is_skew(img):
                report.failures.append(Failure("Delta_r(%s) is skew" % (b,), {"x": dump_value(x)}, "skew",
                                               dump_value(img)))
            cj = cojacobi_defect(r, x)
            if cj:
                report.failures.append(Failure("co-Jacobi at %s" % (b,), {"x": dump_value(x)}, {"terms": []},
                                               dump_value(cj)))
    report.notes.append("r = d⊗e(0,0) - e(0,0)⊗d; %d window probes" % len(window_basis(radius)))
    return report


# -- derivations ---------------------------------------------------------------


def verify_inner_roundtrip(radius: int = DEFAULT_RADIUS, samples: int = 200,
                           seed: int = DEFAULT_SEED) -> VerifyReport:
    """reduce_to_inner(inner_derivation(v)) == v for homogeneous v of nonzero degree."""
    report = VerifyReport("inner-roundtrip")
    rng = random.Random(seed)
    with _Timer(report):
        for i in range(samples):
            while True:
                k = (rng.randint(-radius, radius), rng.randint(-radius, radius))
                if k != (0, 0):
                    break
            v = rand_homogeneous_tensor2(rng, radius, k)
            report.instances_checked += 1
            back = reduce_to_inner(inner_derivation(v, radius))
            if back != v:
                report.failures.append(Failure("sample %d, degree %s" % (i, k), {"v": dump_value(v)},
                                               dump_value(v), dump_value(back)))
    return report


def verify_faithfulness(radius: int = 2, samples: int = 500, seed: int = DEFAULT_SEED,
                        probes: Sequence[AlgElement] = DEFAULT_PROBES) -> VerifyReport:
    report = VerifyReport("faithfulness")
    rng = random.Random(seed)
    with _Timer(report):
        for i in range(samples):
            v = Tensor2Element.zero()
            while not v:
                v = rand_tensor2(rng, radius, terms=4)
            report.instances_checked += 1
            if windowed_faithfulness(v, probes) is None:
                report.failures.append(Failure("sample %d" % i, {"v": dump_value(v)}, "a witness", None))
    return report


def verify_serialization(radius: int = DEFAULT_RADIUS, samples: int = 1000,
                         seed: int = DEFAULT_SEED) -> VerifyReport:
    """parse(dump(x)) == x and dump(parse(dump(x))) == dump(x) for every file format."""
    report = VerifyReport("serialization")
    rng = random.Random(seed)
    kinds = [
        ("element", lambda: rand_element(rng, radius, terms=4, denominators=True), dump_element, parse_element),
        ("tensor2", lambda: rand_tensor2(rng, radius, denominators=True), dump_tensor,
         lambda s: parse_tensor(s, 2)),
        ("tensor3", lambda: rand_tensor3(rng, radius, denominators=True), dump_tensor,
         lambda s: parse_tensor(s, 3)),
        ("table", lambda: rand_table(rng, radius), dump_table, parse_table),
    ]
    with _Timer(report):
        for name, gen, dump, parse in kinds:
            for i in range(samples):
                value = gen()
                text = dump(value)
                report.instances_checked += 1
                back = parse(text)
                if back != value or dump(back) != text:
                    report.failures.append(Failure("%s sample %d" % (name, i), {"text": text}, text, dump(back)))
    return report
