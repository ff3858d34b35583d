"""
Checking the characterisation by exhaustion
===========================================

For every symmetric graph with 2|V| - 2 edges up to a vertex bound, compare
the combinatorial condition with the existence of a symmetric isostatic
placement: admissible instances must be placed (and the placement verified
by exact rank), the others must defeat every symmetric colouring the solver
can try. Pass a case name and a bound on the command line, e.g.
``python3 demos/equivalence_experiment.py C2 7``.
"""
import sys

from symiso import GroupCase, equivalence_experiment, l1_norm, linf_norm

case = GroupCase.parse(sys.argv[1]) if len(sys.argv) > 1 else GroupCase.CS_PRESERVING
n_max = int(sys.argv[2]) if len(sys.argv) > 2 else 6

for norm in (linf_norm(), l1_norm()):
    print(equivalence_experiment(n_max, case, norm).summary())
    print()
