"""
The graded endomorphism object and its Lie-module axioms
========================================================

Builds E = E_-1 + E_-2 for the graded pieces of a motive with abelian
part, prints the component dimensions, shows a bracket value between
two E_-1 basis symbols, and runs the structural verification of the
bracket axioms on every basis pair.
"""

from motcalc import (
    AbelianVarietyModel,
    GaloisLattice,
    MultSpace,
    OneMotive,
    build_E,
    gr,
    link_duals,
    verify_lie_module,
)
from motcalc.liealg import AY, XA, bracket_value

E = AbelianVarietyModel("E", g=1)
Estar = AbelianVarietyModel("Estar", g=1)
link_duals(E, Estar)

# A motive with X of rank 2 and Y^v of rank 3 over the curve; the maps
# v, v* and the pairing psi play no role in E, which only depends on
# the graded pieces.
m = OneMotive(X=GaloisLattice(2), Yv=GaloisLattice(3), A=E, Astar=Estar,
              v=None, vstar=None, psi=None, mult_space=MultSpace(),
              name="demo")
data = build_E(gr(m))

print("E for (r, s) = (%d, %d) over %s" % (data.r, data.s,
                                           data.variety.name))
print("  E_-1 summand copies (over A, over A*):", data.em1_dims)
print("  E_-2 rank r*s:", data.em2.rank)
print("  bracket entries:", len(data.bracket.coefficients))

# The bracket of the i-th X^v tensor A symbol with the j-th A* tensor Y
# symbol is the formal Weil symbol in the (i, j) component of E_-2.
x = (XA, 1, "a")
y = (AY, 2, "b")
value = bracket_value(data, x, y)
print("bracket of copy 1 over A with copy 2 over A*:")
for (component, symbol), coeff in sorted(value.items()):
    print("  component %d: %s with coefficient %s"
          % (component, symbol, coeff))

# The verification walks every basis pair: antisymmetry of values, the
# module axiom linking the bracket to the action maps on X, and the
# absence of a weight -3 component.
result = verify_lie_module(data, gr(m))
print("lie module axioms hold:", bool(result))

# The degenerate case without abelian part has E_-1 = 0 and a zero
# bracket, and still verifies.
m0 = OneMotive(X=GaloisLattice(2), Yv=GaloisLattice(3),
               mult_space=MultSpace(), name="split")
data0 = build_E(gr(m0))
print("no abelian part: E_-1 dims", data0.em1_dims,
      "| bracket zero:", data0.bracket.is_zero(),
      "| verifies:", bool(verify_lie_module(data0, gr(m0))))
