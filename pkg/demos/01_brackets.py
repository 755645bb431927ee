"""Brackets in sl2 over the quantum torus, checked against 2x2 matrices.

Every basis vector except d1, d2 embeds into 2x2 matrices with entries in the
quantum torus, where the bracket is the ordinary commutator.  This script
computes a few brackets from structure constants and compares them with the
matrix computation.
"""

from qtb.algebra import AlgElement, bracket, d, d1, d2, e, f, g, h
from qtb.torus import embed, oracle_bracket, project

pairs = [
    (e(1, 0), f(0, 1)),
    (g(1, 1), h(-1, 0)),
    (g(0, 1), g(0, -1)),
    (e(2, 1), f(-2, -1)),
    (d, e(1, 2)),
]

for x, y in pairs:
    fast = bracket(x, y)
    (bx,), (by,) = x.keys(), y.keys()
    slow = project(oracle_bracket(embed(bx), embed(by)))
    print("[%s, %s] = %s   (matrix check: %s)" % (x.to_text(), y.to_text(), fast.to_text(),
                                                  "ok" if fast == slow else "MISMATCH"))

# the degree derivations read off the grading
x = e(3, -2)
print("[d1, %s] = %s" % (x.to_text(), bracket(d1, x).to_text()))
print("[d2, %s] = %s" % (x.to_text(), bracket(d2, x).to_text()))
print("g(0,0) is zero by convention:", g(0, 0) == AlgElement.zero())
