"""
The wheel on five vertices
==========================

The smallest graph with a reflection-symmetric isostatic placement is the
wheel: a hub joined to a 4-cycle, with the reflection swapping opposite rim
vertices. This script checks the combinatorial condition, places the wheel
under each admissible isometry of the max norm and the taxicab norm, and
prints the exact coordinates and rigidity ranks.
"""
from symiso import check_admissible, is_isostatic, l1_norm, linf_norm, place_w5
from symiso.construct import w5_base
from symiso.placement import taus_for
from symiso.symcore import GroupCase

sg, pair = w5_base()
print("edges:", sg.graph.sorted_edges())
print("reflection:", dict(sg.generator))
print(check_admissible(sg).summary())
print("tree 1:", sorted(pair.tree1))
print("tree 2:", sorted(pair.tree2))

# %% one placement per isometry; all arithmetic is exact
for name, norm in (("max norm", linf_norm()), ("taxicab norm", l1_norm())):
    print()
    print(name)
    for case in (GroupCase.CS_PRESERVING, GroupCase.C2):
        for tau in taus_for(case, norm):
            sp = place_w5(norm, tau)
            rep = is_isostatic(sp.sg.graph, sp.placement, norm)
            pts = {v: tuple(str(x) for x in xy) for v, xy in sp.placement.coords.items()}
            print(f"  {tau.describe():40s} rank {rep.rank}  {pts}")
