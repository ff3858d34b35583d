"""
Symmetries that swap the two facet classes
==========================================

A reflection in a diagonal of the square ball, or a quarter turn, exchanges
the two edge colours. Then the two monochrome spanning trees must be images
of each other. This script places the bundled reflection and quarter-turn
examples, checks that the colour classes are swapped by the symmetry, and
shows that a parallelogram without a square's symmetry has no quarter turn.
"""
from pathlib import Path

from symiso import fileio, is_isostatic, make_quad_norm, synthesize
from symiso.errors import NoSwappingIsometry
from symiso.polynorm import FacetClass

DATA = Path(__file__).resolve().parent.parent / "data"

for name in ("mirror_swap6", "quarterturn8"):
    sg, norm = fileio.parse_instance(fileio.read_json(DATA / f"{name}.json"))
    sp = synthesize(sg, norm)
    col = sp.coloring
    f1 = col.monochrome(FacetClass.F1)
    images = {sg.act_edge(e) for e in f1}
    print(f"{name}: {sg.case.value}, tau = {sp.tau.describe()}")
    print("  class F1:", sorted(f1))
    print("  its image is class F2:", images == col.monochrome(FacetClass.F2))
    print(" ", is_isostatic(sg.graph, sp.placement, norm).summary())

# %% a skewed ball
skew = make_quad_norm((1, 0), (1, 1))
sg, _ = fileio.parse_instance(fileio.read_json(DATA / "quarterturn8.json"))
try:
    synthesize(sg, skew)
except NoSwappingIsometry as exc:
    print("skewed ball:", exc)
