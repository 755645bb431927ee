"""Derivations into the tensor square and their inner form.

A tensor v gives the derivation x -> x.v.  For a homogeneous derivation of
nonzero degree k, evaluating at a degree derivation d_rho with rho(k) != 0
recovers v = t(d_rho) / rho(k).  Here we build a table from a known v, forget
v, and reduce the table back.
"""

from qtb.algebra import e, f, g, h
from qtb.cohomology import agreement_report, inner_derivation, leibniz_failures, pick_probe, reduce_to_inner
from qtb.formats import dump_table
from qtb.laurent import parse_ratfunc
from qtb.tensor import otimes

v = otimes(e(1, 0), f(0, 1)).scale(parse_ratfunc("q+q^-1")) + otimes(g(1, 2), h(0, -1))
k = (1, 1)
t = inner_derivation(v, 2)
print("table over the radius-2 window: %d assignments, degrees %s" % (len(t.assignments), sorted(t.degrees())))
print("Leibniz failures:", len(leibniz_failures(t)))
print("probe for degree %s: d_rho with rho = (%s, %s)" % (k, pick_probe(k).rho1, pick_probe(k).rho2))

back = reduce_to_inner(t)
print("recovered v:", back.to_text())
print("recovered equals original:", back == v)
print("agreement on every assigned basis vector:", all(agreement_report(t, back).values()))
print("serialized table is %d bytes of JSON" % len(dump_table(t)))
