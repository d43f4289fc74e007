"""
Weight filtration and Cartier duality
=====================================

Builds a small 1-motive by hand, prints its weight filtration and
graded pieces, then takes the Cartier dual and checks that dualizing
twice gives back the original motive.
"""

from motcalc import (
    AbelianVarietyModel,
    GaloisLattice,
    MultSpace,
    OneMotive,
    PointVector,
    cartier_dual,
    gr,
    link_duals,
    weight_filtration,
)

# An elliptic curve E with two tracked points P1, P2 and its dual Estar
# with one tracked point Q.  Point coordinates live in a user-chosen
# rational coordinate space.
E = AbelianVarietyModel("E", g=1, point_space_dim=2,
                        tracked_points={"P1": (1, 0), "P2": (0, 1)})
Estar = AbelianVarietyModel("Estar", g=1, point_space_dim=1,
                            tracked_points={"Q": (1,)})
link_duals(E, Estar)

# The motive [Z -> G] with X of rank 1 mapping to P1, Y^v of rank 1
# mapping to Q, and a single multiplicative coordinate q for psi.
mult = MultSpace(("q",))
m = OneMotive(
    name="demo",
    X=GaloisLattice(1),
    Yv=GaloisLattice(1),
    A=E,
    Astar=Estar,
    v=PointVector(E, (E.point("P1"),)),
    vstar=PointVector(Estar, (Estar.point("Q"),)),
    psi=((mult.element({"q": 1}),),),
    mult_space=mult,
)

w = weight_filtration(m)
print("weight filtration of", m.name)
print("  gr_0 rank:", w.r)
print("  dim W_-1:", w.dim_wm1, " (g + s)")
print("  dim W_-2:", w.dim_wm2, " (s)")

pieces = gr(m)
print("graded pieces: X rank", pieces.gr0.rank,
      "| A =", pieces.grm1.name, "| Y rank", pieces.grm2.rank)

# Cartier duality swaps the lattice and torus parts and replaces A by
# its dual; the pairing gets transposed.
md = cartier_dual(m)
print("dual motive:", md.name)
print("  X rank", md.r, "| Yv rank", md.s, "| A =", md.A.name)

# Dualizing twice returns the original up to renaming.
mdd = cartier_dual(md)
print("double dual equals original:", mdd.structurally_equal(m))
