"""A triangular Lie bialgebra structure and one that is not.

r = d⊗e(0,0) - e(0,0)⊗d satisfies the classical Yang-Baxter equation, so
delta_r(x) = x.r is a Lie cobracket.  r = e⊗f - f⊗e does not, and a probe
from the window shows the modified equation fails as well.
"""

from qtb.algebra import d, e, f, window_basis, AlgElement
from qtb.bialgebra import DEFAULT_PROBES, c_of_r, cojacobi_defect, delta_r, mybe_witness
from qtb.tensor import is_skew, otimes

E0, F0 = e(0, 0), f(0, 0)
r = otimes(d, E0) - otimes(E0, d)
print("r =", r.to_text())
print("skew:", is_skew(r), " c(r) = 0:", c_of_r(r).is_zero())

probes = [AlgElement.from_key(b) for b in window_basis(1)]
print("cobracket images skew on %d probes:" % len(probes), all(is_skew(delta_r(r, x)) for x in probes))
print("co-Jacobi defect zero on every probe:", all(cojacobi_defect(r, x).is_zero() for x in probes))
print("delta_r(e(1,0)) =", delta_r(r, e(1, 0)).to_text())

r2 = otimes(E0, F0) - otimes(F0, E0)
print()
print("r' =", r2.to_text())
print("c(r') =", c_of_r(r2).to_text())
w = mybe_witness(r2, DEFAULT_PROBES)
print("x.c(r') != 0 for x =", w.to_text())
