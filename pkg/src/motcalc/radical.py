"""The unipotent radical of the motivic Galois group of a 1-motive.

Given a 1-motive M with graded pieces (X, A, Y(1)) of ranks (r, g, s), the
negative-weight part of Lie G_mot(M) is a semi-abelian variety: an
extension of an abelian variety B by a torus Z(1).  This module computes
both pieces exactly from the declared data:

* b = (b1, b2) is the point of E_-1(k) determined by (v, v*);
* B is the smallest abelian subvariety of X^v tensor A + A* tensor Y
  (up to isogeny, over k) whose points contain b: per side, the
  annihilator of the relation module, followed by Galois stable closure;
* Z1(1) is the smallest subtorus of (X^v tensor Y)(1) containing the
  image of the Lie bracket restricted to B: the characters killing the
  restricted bracket are computed exactly, and Z1 is the stable closure
  of their annihilator;
* Z(1) additionally contains the projection pi(b~) of the lifted point:
  a character c of Z1-perp kills pi(b~) iff sum c_ij psi(e_i, f_j)
  vanishes in the value group, and Z is the stable closure of Z1 plus
  the annihilator of those characters.

The bracket image calculation treats the formal Weil values
<B_t alpha, B_tau beta> of endomorphism translates as independent
symbols.  For End = Q this is exact; for larger fields it can only
overestimate Z1, never miss a required character.

Dimension bookkeeping: dim of the unipotent radical is dim B + dim Z,
and the total dim of Lie G_mot(M) adds the reductive dimension of the
graded part, which is 1 when A = 0 and Y is nonzero, 0 when A = Y = 0,
and otherwise must be supplied by the caller (the abelian part's group
is outside this calculus); when it is not supplied the report carries
the symbolic value "dim Lie G_mot(A)".

The torus Z(1) is reported through characters: all subspaces of
X^v tensor Y are flattened with index (i, j) -> i*s + j.
"""

import math
from fractions import Fraction

from .abelian import PointVector, SubvarietyData, relation_module, \
    annihilator_module
from .errors import ValidationError
from .exactlin import (
    IntLattice,
    RatMatrix,
    Subspace,
    annihilator,
    kernel,
    saturate,
    space_intersect,
    space_sum,
)
from .lattices import GaloisLattice, dual, stable_closure, tensor
from .motive import OneMotive
from .multgroup import MultSpace

REDUCTIVE_SYMBOL = "dim Lie G_mot(A)"


def _flat_action(lattice, d):
    """Action matrices on the flattened module (copies tensor Q^d)."""
    if d == 1:
        return lattice.action
    eye = RatMatrix.identity(d)
    return tuple(m.kron(eye) for m in lattice.action)


def extract_b(m):
    """The point b = (b1, b2) of E_-1(k) determined by (v, v*).

    Returns the two point vectors (multiplicity r over A and s over A*),
    or (None, None) when the motive has no abelian part.
    """
    if m.A is None:
        return (None, None)
    return (m.v, m.vstar)


class BData:
    """The abelian part B of the radical, one module per side."""

    def __init__(self, w_a, w_astar):
        self.w_a = w_a
        self.w_astar = w_astar
        self.dim = (w_a.dim if w_a is not None else 0) + \
            (w_astar.dim if w_astar is not None else 0)

    def __repr__(self):
        return "BData(dim=%d)" % (self.dim,)


def _closed_side(points, index_lattice):
    """Smallest subvariety data through a point vector, Galois-closed.

    ``index_lattice`` is the lattice whose dual indexes the copies (X for
    the A side, Yv for the A* side); the induced action on the flattened
    module is the dual action tensored with the identity of the
    endomorphism algebra.
    """
    variety = points.variety
    d = variety.end_algebra.dimension
    module = annihilator_module(variety, points.multiplicity,
                                relation_module(points))
    action = _flat_action(dual(index_lattice), d)
    flat = GaloisLattice(points.multiplicity * d, action=action,
                         group=index_lattice.group)
    closed = stable_closure(flat, module)
    if closed.dim % d != 0:
        raise ValidationError(
            "Galois closure broke the endomorphism module structure")
    dim = (closed.dim // d) * variety.g
    return SubvarietyData(variety, points.multiplicity, closed, dim)


def smallest_B(m):
    """The smallest Galois-stable abelian subvariety through b."""
    if m.A is None:
        return BData(None, None)
    return BData(_closed_side(m.v, m.X), _closed_side(m.vstar, m.Yv))


def _em2_lattice(m):
    """X^v tensor Y with its Galois action (rank r*s)."""
    return tensor(dual(m.X), dual(m.Yv))


def derived_torus_Z1(m, b_data):
    """Characters of the bracket image on B, annihilated and closed.

    A character c (an r x s table flattened to i*s + j) kills the
    restricted bracket iff sum_ij c_ij u_it w_jtau = 0 for every basis
    pair (u, w) of the two B modules and every pair (t, tau) of
    endomorphism coordinates; Z1 is the stable closure of the
    annihilator of all such characters.
    """
    r, s = m.r, m.s
    ambient = r * s
    if m.A is None or ambient == 0 or b_data.dim == 0:
        return Subspace.zero(ambient)
    d_a = m.A.end_algebra.dimension
    d_astar = m.Astar.end_algebra.dimension
    rows = []
    for u in b_data.w_a.module.basis_columns():
        for w in b_data.w_astar.module.basis_columns():
            for t in range(d_a):
                for tau in range(d_astar):
                    row = [Fraction(0)] * ambient
                    for i in range(r):
                        ui = u[i * d_a + t]
                        if not ui:
                            continue
                        for j in range(s):
                            row[i * s + j] = ui * w[j * d_astar + tau]
                    rows.append(row)
    if not rows:
        return Subspace.zero(ambient)
    k_space = kernel(RatMatrix.from_rows(rows))
    return stable_closure(_em2_lattice(m), annihilator(k_space))


def psi_matrix(m):
    """The value-group pairing as a (mult dim) x (r*s) matrix."""
    mu = m.mult_space.dim
    cols = []
    for i in range(m.r):
        for j in range(m.s):
            cols.append(list(m.psi[i][j]))
    return RatMatrix.from_columns(cols, nrows=mu)


def torus_Z(m, b_data, z1):
    """The smallest stable subspace containing Z1 and seeing pi(b~).

    R collects the characters of Z1-perp whose psi-evaluation vanishes;
    Z is the stable closure of Z1 plus the annihilator of R.
    """
    ambient = m.r * m.s
    if ambient == 0:
        return Subspace.zero(0)
    z1_perp = annihilator(z1)
    vanishing = space_intersect(z1_perp, kernel(psi_matrix(m)))
    grown = space_sum(z1, annihilator(vanishing))
    return stable_closure(_em2_lattice(m), grown)


class ExtensionHom:
    """The hom V: Z^v -> B* on a basis of Z-characters.

    For a character z (an r x s table), the A*-side value puts
    sum_j z_ij v*(f_j) on the i-th copy of A*, and the A-side value puts
    sum_i z_ij v(e_i) on the j-th copy of A; together these are the
    coordinates of a point of B*(k) tensor Q.
    """

    def __init__(self, characters, astar_values, a_values):
        self.characters = characters
        self.astar_values = astar_values
        self.a_values = a_values

    def __repr__(self):
        return "ExtensionHom(%d characters)" % (len(self.characters),)


def _extension_values(m, characters):
    if m.A is None:
        return ExtensionHom(characters,
                            tuple(None for _ in characters),
                            tuple(None for _ in characters))
    r, s = m.r, m.s
    n_astar = m.Astar.point_space_dim
    n_a = m.A.point_space_dim
    astar_values = []
    a_values = []
    for z in characters:
        astar_rows = []
        for i in range(r):
            acc = [Fraction(0)] * n_astar
            for j in range(s):
                c = z[i * s + j]
                if c:
                    q = m.vstar.coords[j]
                    acc = [x + c * y for x, y in zip(acc, q)]
            astar_rows.append(acc)
        a_rows = []
        for j in range(s):
            acc = [Fraction(0)] * n_a
            for i in range(r):
                c = z[i * s + j]
                if c:
                    p = m.v.coords[i]
                    acc = [x + c * y for x, y in zip(acc, p)]
            a_rows.append(acc)
        astar_values.append(PointVector(m.Astar, astar_rows))
        a_values.append(PointVector(m.A, a_rows))
    return ExtensionHom(characters, tuple(astar_values), tuple(a_values))


class RadicalReport:
    """Everything computed about W_-1(Lie G_mot(M))."""

    def __init__(self, motive, b1, b2, b_data, z1, z, extension,
                 reductive_dim):
        self.motive = motive
        self.b1 = b1
        self.b2 = b2
        self.b = b_data
        self.z1 = z1
        self.z = z
        self.extension = extension
        self.dim_B = b_data.dim
        self.dim_Z = z.dim
        self.dim_unipotent = self.dim_B + self.dim_Z
        self.derived_dim = z1.dim
        self.quasi_deficient = z1.dim == 0
        self.reductive_dim = reductive_dim
        self.total_dim = (self.dim_unipotent + reductive_dim
                          if isinstance(reductive_dim, int) else None)

    def __repr__(self):
        return "RadicalReport(dim_B=%d, dim_Z=%d)" % (self.dim_B, self.dim_Z)


def unipotent_radical(m, reductive_dim=None):
    """Full radical computation for one motive.

    ``reductive_dim`` supplies dim Lie G_mot(Gr M) when the motive has an
    abelian part; without an abelian part the value is forced (1 if the
    torus part is nonzero, else 0) and the argument is ignored.
    """
    b1, b2 = extract_b(m)
    b_data = smallest_B(m)
    z1 = derived_torus_Z1(m, b_data)
    z = torus_Z(m, b_data, z1)
    extension = _extension_values(m, tuple(z.basis_columns()))
    if m.A is None:
        reductive = 1 if m.s > 0 else 0
    elif reductive_dim is not None:
        reductive = int(reductive_dim)
    else:
        reductive = REDUCTIVE_SYMBOL
    return RadicalReport(m, b1, b2, b_data, z1, z, extension, reductive)


def _integral_basis(space):
    """Integer basis of (space intersect Z^n), canonical via saturation."""
    cols = []
    for vec in space.basis_columns():
        denom = math.lcm(*(x.denominator for x in vec)) if vec else 1
        cols.append([int(x * denom) for x in vec])
    if not cols:
        return ()
    return saturate(IntLattice(space.ambient_dim, cols)).generators


class DualRadicalData:
    """The 1-motive [V: Z^v -> B*] dual to the unipotent radical.

    ``lattice`` is Z^v with the action induced from X^v tensor Y (the
    dual of the restriction to Z).  ``characters`` is the matching
    integral basis of Z.  ``astar_values``/``a_values`` give V on each
    basis character as points on the two sides of B* ((A*)^r restricted
    by the W_A module, A^s restricted by the W_A* module; the module
    data itself sits in ``report.b``).
    """

    def __init__(self, report, lattice, characters, extension):
        self.report = report
        self.lattice = lattice
        self.characters = characters
        self.astar_values = extension.astar_values
        self.a_values = extension.a_values

    def to_one_motive(self, name=None):
        """Re-express as a OneMotive when the data permits.

        Supported exactly when B = 0: the dual is the pure lattice
        motive [Z^v -> 0].  With a nonzero B the target B* is a product
        of subvariety quotients that has no registered model, so None is
        returned.
        """
        if self.report.dim_B != 0:
            return None
        group = self.lattice.group
        return OneMotive(
            self.lattice, GaloisLattice(0, group=group),
            mult_space=MultSpace(), name=name)

    def __repr__(self):
        return "DualRadicalData(rank=%d, dim_Bstar=%d)" % (
            self.lattice.rank, self.report.dim_B)


def radical_cartier_dual(report):
    """Emit [V: Z^v -> B*] from a computed radical report.

    The lattice Z^v inherits the dual of the Galois action restricted to
    Z; V is re-evaluated on the integral character basis so that the
    emitted data is independent of the rational basis used internally.
    """
    m = report.motive
    chars = _integral_basis(report.z)
    em2 = _em2_lattice(m)
    rank = len(chars)
    if rank:
        basis_mat = RatMatrix.from_columns([list(c) for c in chars],
                                           nrows=m.r * m.s)
        restricted = []
        for g in em2.action:
            cols = []
            for c in chars:
                image = g.apply(c)
                coords = basis_mat.solve(image)
                if coords is None:
                    raise ValidationError("Z is not stable under the action")
                cols.append(list(coords))
            restricted.append(RatMatrix.from_columns(cols, nrows=rank))
        zv_action = tuple(r.inverse().transpose() for r in restricted)
        for mat in zv_action:
            if any(x.denominator != 1 for row in mat.row_list() for x in row):
                raise ValidationError(
                    "induced action on Z^v is not integral")
    else:
        zv_action = tuple(RatMatrix.identity(0) for _ in em2.action)
    lattice = GaloisLattice(rank, action=zv_action, group=m.X.group)
    extension = _extension_values(m, chars)
    return DualRadicalData(report, lattice, chars, extension)
