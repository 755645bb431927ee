"""Exact computations in sl2 over the quantum torus, extended by degree derivations.

Coefficients live in Q(q) with q formal.  The package covers the bracket and
its matrix model, the adjoint action on tensor squares and cubes, coboundary
Lie bialgebra structures, and derivations into the tensor square.
"""

from .laurent import LaurentPoly, ParseError, RatFunc, as_ratfunc, parse_ratfunc, q_pow, ONE, ZERO
from .algebra import (AlgElement, Basis, Kind, basis, bracket, bracket_basis, d, d1, d2, degree_of, e, f, g, h,
                      homogeneous_components, jacobi_defect, window_basis)
from .torus import (DegreeDerivationNotRepresentable, NotInImage, TorusElement, embed, embed_element,
                    oracle_bracket, project, torus_mul)
from .tensor import (Tensor2Element, Tensor3Element, act, act2, act3, cyclic, homogeneous_parts, is_skew,
                     otimes, skew_part, tensor_degree, twist)
from .bialgebra import (DEFAULT_PROBES, RMatrix, c_of_r, check_cybe, cojacobi_defect, cojacobi_gap,
                        compatibility_defect, delta_r, mybe_witness)
from .cohomology import (DerivationTable, OutOfWindow, Probe, ZeroDegree, agreement_report,
                         homogeneous_component, inner_derivation, leibniz_defect, leibniz_failures, pick_probe,
                         reduce_to_inner, windowed_faithfulness)
from .formats import (FormatError, dump_element, dump_table, dump_tensor, parse_element, parse_table,
                      parse_tensor)
from .identities import UnknownSuite, run_identity_suite
from .report import Failure, VerifyReport

__version__ = "0.1.0"
