"""
The unipotent radical: abelian part B and toric part Z(1)
=========================================================

Computes the radical data for the worked torus examples: the motive
Z^3 -> G_m with map (q1, q2, 1), the independent pair (p1, p2) in
G_m^2, and Z^4 -> G_m with map (r1, r1^3, 1, r2).  With no abelian
part B always vanishes; Z tracks the multiplicative relations among
the images, and its complement in E_-2 records the monomial relations.
"""

from motcalc import (
    GaloisLattice,
    MultSpace,
    OneMotive,
    radical_cartier_dual,
    unipotent_radical,
)


def torus_motive(name, images, mult_names):
    """The motive [Z^r -> G_m^mu] sending generator i to images[i]."""
    mult = MultSpace(mult_names)
    return OneMotive(
        name=name,
        X=GaloisLattice(len(images)),
        Yv=GaloisLattice(1),
        psi=tuple((mult.element(e),) for e in images),
        mult_space=mult,
    )


def show(motive):
    report = unipotent_radical(motive)
    print("motive", motive.name)
    print("  dim B:", report.dim_B, "| dim Z:", report.dim_Z,
          "| dim unipotent:", report.dim_unipotent)
    print("  Z basis:", [[str(c) for c in col]
                         for col in report.z.basis_columns()])
    print("  quasi-deficient:", report.quasi_deficient,
          "| derived dim:", report.derived_dim)
    print("  total dim Lie:", report.total_dim,
          "(reductive part %s)" % (report.reductive_dim,))
    return report


# (q1, q2, 1): two independent units and one torsion image.  The two
# unit directions span Z; the torsion direction is a trivial summand.
gm3 = show(torus_motive("gm3", [{"q1": 1}, {"q2": 1}, {}], ("q1", "q2")))

# (p1, p2): fully independent images, Z is everything.
show(torus_motive("gm2", [{"p1": 1}, {"p2": 1}], ("p1", "p2")))

# (r1, r1^3, 1, r2): a monomial relation x2 = x1^3 cuts Z down to two
# directions, one through (1, 3) and one through the r2 coordinate.
show(torus_motive("z4", [{"r1": 1}, {"r1": 3}, {}, {"r2": 1}],
                  ("r1", "r2")))

# The dual expresses the radical as a pure lattice motive [Z^v -> 0]
# whenever B vanishes; its rank is dim Z and its characters are the
# integral basis of Z.
dual = radical_cartier_dual(gm3)
print("dual radical of gm3: rank", dual.lattice.rank,
      "| characters", dual.characters,
      "| as a motive:", dual.to_one_motive("gm3_dual") is not None)
