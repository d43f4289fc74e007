"""The 1-motive data model: 7-tuples, weights, graded pieces, Cartier duality.

A 1-motive M = [X -> G] over k, with G an extension of an abelian variety A
by a torus with character lattice Yv, is stored in its symmetric 7-tuple
form (X, Yv, A, A*, v, v*, psi):

* ``X``: a Galois lattice of rank r,
* ``Yv``: a Galois lattice of rank s,
* ``A`` and ``Astar``: a registered dual pair of abelian variety models
  (both None when there is no abelian part),
* ``v``: the images v(e_i) in A(k), a point vector of multiplicity r,
* ``vstar``: the images v*(f_j) in A*(k), a point vector of multiplicity s,
* ``psi``: an r x s matrix of values in a multiplicative group, the
  trivialization of the pullback of the Poincare biextension.

The group G itself is never materialized; every computation downstream
consumes the 7-tuple directly.  Tracked points and psi values are taken
Galois-fixed (defined over k), so equivariance of (v, v*, psi) amounts to
invariance under the declared action on X and Yv; construction checks this
and rejects non-equivariant data.

The weight filtration has W_-1 = [0 -> G] of dimension g + s and
W_-2 = the torus of dimension s; the graded pieces are X, A and Y(1).
Cartier duality exchanges the two halves of the 7-tuple and transposes
psi; it is an involution.
"""

from .abelian import AbelianVarietyModel, PointVector
from .errors import ValidationError
from .exactlin import RatMatrix, rat
from .lattices import GaloisLattice, dual
from .multgroup import MultSpace


class OneMotive:
    """A 1-motive in 7-tuple form with a declared value group for psi."""

    def __init__(self, X, Yv, A=None, Astar=None, v=None, vstar=None,
                 psi=None, mult_space=None, name=None):
        if not isinstance(X, GaloisLattice) or not isinstance(Yv, GaloisLattice):
            raise ValidationError("X and Yv must be Galois lattices")
        if X.group != Yv.group:
            raise ValidationError("X and Yv must carry actions of the same group")
        self.X = X
        self.Yv = Yv
        self.name = name

        if (A is None) != (Astar is None):
            raise ValidationError("A and Astar must be given together or not at all")
        if A is not None:
            if not isinstance(A, AbelianVarietyModel):
                raise ValidationError("A must be an abelian variety model")
            if not A.has_dual or A.dual is not Astar:
                raise ValidationError("Astar must be the registered dual of A")
        self.A = A
        self.Astar = Astar

        self.v = self._check_points(v, A, X.rank, "v")
        self.vstar = self._check_points(vstar, Astar, Yv.rank, "vstar")

        self.mult_space = mult_space if mult_space is not None else MultSpace()
        self.psi = self._check_psi(psi)
        self._check_equivariance()

    @staticmethod
    def _check_points(points, variety, multiplicity, label):
        if variety is None:
            if points is not None and points.multiplicity != 0:
                raise ValidationError(
                    "%s given but the motive has no abelian part" % (label,))
            return None
        if points is None:
            return PointVector.zero(variety, multiplicity)
        if points.variety is not variety:
            raise ValidationError("%s lives on the wrong variety" % (label,))
        if points.multiplicity != multiplicity:
            raise ValidationError(
                "%s has multiplicity %d, expected %d"
                % (label, points.multiplicity, multiplicity))
        return points

    def _check_psi(self, psi):
        r, s, mu = self.X.rank, self.Yv.rank, self.mult_space.dim
        if psi is None:
            return tuple(tuple((rat(0),) * mu for _ in range(s))
                         for _ in range(r))
        rows = tuple(tuple(tuple(rat(c) for c in entry) for entry in row)
                     for row in psi)
        if len(rows) != r or any(len(row) != s for row in rows):
            raise ValidationError("psi must be an r x s matrix of values")
        for row in rows:
            for entry in row:
                if len(entry) != mu:
                    raise ValidationError(
                        "psi entry has %d coordinates, value group has dim %d"
                        % (len(entry), mu))
        return rows

    def _check_equivariance(self):
        group = self.X.group
        for k in range(group.generator_count):
            gx = self.X.action[k]
            gy = self.Yv.action[k]
            if self.A is not None and self.X.rank > 0:
                p = RatMatrix.from_columns(
                    [list(c) for c in self.v.coords],
                    nrows=self.A.point_space_dim)
                if p * gx != p:
                    raise ValidationError(
                        "v is not equivariant under generator %d" % (k,))
            if self.Astar is not None and self.Yv.rank > 0:
                q = RatMatrix.from_columns(
                    [list(c) for c in self.vstar.coords],
                    nrows=self.Astar.point_space_dim)
                if q * gy != q:
                    raise ValidationError(
                        "vstar is not equivariant under generator %d" % (k,))
            if self.X.rank and self.Yv.rank:
                for m in range(self.mult_space.dim):
                    comp = self.psi_component(m)
                    if gx.transpose() * comp * gy != comp:
                        raise ValidationError(
                            "psi is not equivariant under generator %d" % (k,))

    @property
    def r(self):
        return self.X.rank

    @property
    def s(self):
        return self.Yv.rank

    @property
    def g(self):
        return self.A.g if self.A is not None else 0

    def psi_component(self, m):
        """The r x s rational matrix of the m-th value-group coordinate."""
        return RatMatrix(
            self.r, self.s,
            [[self.psi[i][j][m] for j in range(self.s)] for i in range(self.r)])

    def structurally_equal(self, other):
        """Field-by-field comparison (models compared by identity)."""
        return (
            self.X == other.X
            and self.Yv == other.Yv
            and self.A is other.A
            and self.Astar is other.Astar
            and (self.v.coords if self.v is not None else None)
            == (other.v.coords if other.v is not None else None)
            and (self.vstar.coords if self.vstar is not None else None)
            == (other.vstar.coords if other.vstar is not None else None)
            and self.psi == other.psi
            and self.mult_space.generator_names == other.mult_space.generator_names
        )

    def __repr__(self):
        return "OneMotive(r=%d, g=%d, s=%d%s)" % (
            self.r, self.g, self.s,
            ", name=%r" % (self.name,) if self.name else "")


class WeightFiltration:
    """Dimensions of the weight steps of a 1-motive.

    W_0 is the motive itself; W_-1 = [0 -> G] is the semi-abelian part of
    dimension g + s; W_-2 is the torus of dimension s.
    """

    def __init__(self, r, s, g):
        self.r = r
        self.s = s
        self.g = g

    @property
    def dim_wm1(self):
        return self.g + self.s

    @property
    def dim_wm2(self):
        return self.s

    def __repr__(self):
        return "WeightFiltration(dim W_-1=%d, dim W_-2=%d; r=%d, s=%d, g=%d)" % (
            self.dim_wm1, self.dim_wm2, self.r, self.s, self.g)


class GradedPieces:
    """The split weight-graded object X + A + Y(1) of a 1-motive."""

    def __init__(self, gr0, grm1, grm2):
        self.gr0 = gr0
        self.grm1 = grm1
        self.grm2 = grm2

    def __repr__(self):
        return "GradedPieces(rank X=%d, dim A=%d, rank Y=%d)" % (
            self.gr0.rank,
            self.grm1.g if self.grm1 is not None else 0,
            self.grm2.rank)


def weight_filtration(m):
    """Weight filtration dimensions of a 1-motive.

    >>> from motcalc.lattices import GaloisLattice
    >>> wf = weight_filtration(OneMotive(GaloisLattice(1), GaloisLattice(3),
    ...                                  mult_space=MultSpace(["q1", "q2"]),
    ...                                  psi=[[(1, 0), (0, 1), (0, 0)]]))
    >>> wf.dim_wm1, wf.dim_wm2
    (3, 3)
    """
    return WeightFiltration(m.r, m.s, m.g)


def gr(m):
    """Graded pieces (X, A, Y(1)); Y is the dual lattice of Yv."""
    return GradedPieces(m.X, m.A, dual(m.Yv))


def cartier_dual(m):
    """The Cartier dual 7-tuple (Yv, X, A*, A, v*, v, psi transposed).

    Transposition of psi: the dual's entry at (j, i) is psi(e_i, f_j).
    Applying the operation twice returns a motive structurally equal to
    the input.
    """
    psi_t = tuple(
        tuple(m.psi[i][j] for i in range(m.r)) for j in range(m.s))
    return OneMotive(
        X=m.Yv, Yv=m.X, A=m.Astar, Astar=m.A, v=m.vstar, vstar=m.v,
        psi=psi_t, mult_space=m.mult_space,
        name=None if m.name is None else m.name + "*")
