"""
Growing and shrinking a symmetric graph
=======================================

Start from the wheel, apply a few symmetric extension moves, then ask the
library to reduce the result back to a wheel. The reduction picks its own
moves (by the degree of the vertex removed and how its neighbourhood meets
that of its mirror image), so the recovered chain generally differs from the
one we used. Finally the chain is replayed geometrically: every step keeps
the old points and adds a mirrored pair.
"""
from symiso import ExtensionMove, MoveKind, build_chain, is_isostatic, linf_norm, replay, synthesize
from symiso.construct import apply_move, w5_base

sg, _ = w5_base()
moves = [
    ExtensionMove(MoveKind.ZERO, (1, 2), (5, 6)),
    ExtensionMove(MoveKind.ONE, (5, 1, 0), (7, 8)),
    ExtensionMove(MoveKind.FIXED_VERTEX_TO_W5, (0,), (9, 10, 11, 12),
                  ((1, 9), (3, 11), (2, 10), (4, 12), (7, 9), (8, 11))),
]
for move in moves:
    sg = apply_move(sg, move)
    print(f"{move.describe():60s} -> {sg.graph.n} vertices, {sg.graph.m} edges")

# %% reduce back to the wheel
chain = build_chain(sg)
print()
print("recovered chain from the wheel on", sorted(chain.base.graph.vertices))
for i, move in enumerate(chain.moves, 1):
    print(f"  step {i}: {move.describe()}")
assert replay(chain).graph == sg.graph

# %% place along the chain
sp = synthesize(sg, linf_norm())
rep = is_isostatic(sg.graph, sp.placement, linf_norm())
print()
print("route:", sp.route, "|", rep.summary())
for v in sg.graph.vertices:
    x, y = sp.placement[v]
    print(f"  p({v}) = ({x}, {y})")
