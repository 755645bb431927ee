"""Run the displayed identity suites and show where one of them breaks.

Suites a-e and g pass.  In suite f the element v that is supposed to be killed
by G(1,0) is not: [g(1,0), g(0,n)] = (1-q^n) g(1,n) leaves a G(1,n)⊗H(0,-n)
term that nothing cancels.  The script prints the first counterexample.
"""

import sys

from qtb.identities import SUITES, run_identity_suite

radius = int(sys.argv[1]) if len(sys.argv) > 1 else 2
for sid in SUITES:
    rep = run_identity_suite(sid, radius)
    print(rep.summary().splitlines()[0])
    if not rep.passed:
        print("   failing lines:", sorted({fl.label for fl in rep.failures}))
        print("   first inputs:", rep.first_failure.inputs)
        print("   residue:", rep.first_failure.actual)
