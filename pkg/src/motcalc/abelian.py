"""Abelian varieties as declared data, and the subvariety generated by points.

A variety is never presented by equations here.  A model consists of a name,
a dimension g, a rational representation of an endomorphism algebra D, a
finite dimensional "point space" (a Q-vector space receiving the tracked
points, typically a subgroup of A(k) tensor Q), and the action of D on that
space.  All questions asked later reduce to exact linear algebra over the
declared data.

The two computational services are

* ``relation_module(p)``: all D-linear relations satisfied by a tuple of
  points, as a Q-subspace of the flattened module D^m, and
* ``smallest_subvariety(p)``: the annihilator of that module under the
  multiplication pairing of D, which identifies the smallest abelian
  subvariety of A^m whose points contain p.

The algebra D is restricted to commutative fields in this version; a
noncommutative declaration raises :class:`UnsupportedModelError`.
"""

import math
from fractions import Fraction

from .errors import UnsupportedModelError, ValidationError
from .exactlin import RatMatrix, Subspace, kernel, rat


def _flatten(m):
    """Row-major flattening of a matrix into a single coordinate tuple."""
    out = []
    for i in range(m.rows):
        out.extend(m.row(i))
    return tuple(out)


def _minimal_polynomial(m):
    """Monic minimal polynomial of a matrix, constant coefficient first."""
    size = m.rows * m.cols
    powers = [RatMatrix.identity(m.rows)]
    while True:
        stacked = RatMatrix.from_columns(
            [list(_flatten(p)) for p in powers], nrows=size)
        nxt = powers[-1] * m
        sol = stacked.solve(_flatten(nxt))
        if sol is not None:
            return tuple(-c for c in sol) + (Fraction(1),)
        powers.append(nxt)


def _poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(a, b):
    a = _poly_trim(a)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a = _poly_trim(a)
    return a


def _is_squarefree(p):
    derivative = _poly_trim(
        [Fraction(k) * c for k, c in enumerate(p)][1:])
    a, b = _poly_trim(p), derivative
    while b:
        a, b = b, _poly_mod(a, b)
    return len(a) == 1


def _divisors(n):
    n = abs(n)
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.add(i)
            out.add(n // i)
        i += 1
    return out


def _has_rational_root(p):
    denom = math.lcm(*(c.denominator for c in p))
    ints = [int(c * denom) for c in p]
    if ints[0] == 0:
        return True
    for den in _divisors(ints[-1]):
        for num in _divisors(ints[0]):
            for x in (Fraction(num, den), Fraction(-num, den)):
                value = Fraction(0)
                for c in reversed(p):
                    value = value * x + c
                if value == 0:
                    return True
    return False


class EndAlgebraRep:
    """A unital commutative matrix algebra over Q, closed under products.

    ``degree`` is the size of the matrices.  ``generators`` is any finite
    set of degree x degree rational matrices; the represented algebra is the
    unital Q-algebra they generate.  Construction computes a Q-basis of that
    algebra (always containing the identity), verifies commutativity, and
    checks that the algebra is a field: every basis element must be
    invertible, and every generator's minimal polynomial must be squarefree
    with no rational root in degree two or more.  The squarefree condition
    makes nilpotent detection complete (commuting matrices with squarefree
    minimal polynomials generate a reduced algebra); a product of two
    fields neither of which is Q can still evade the root test, and in
    that case the module computations remain exact over the product.

    >>> E = EndAlgebraRep(1)
    >>> E.dimension
    1
    >>> sqrt2 = RatMatrix.from_rows([[0, 2], [1, 0]])
    >>> EndAlgebraRep(2, [sqrt2]).dimension
    2
    """

    def __init__(self, degree, generators=(), commutative=True):
        if degree < 1:
            raise ValidationError("endomorphism algebra degree must be >= 1")
        if not commutative:
            raise UnsupportedModelError(
                "noncommutative endomorphism algebras are not supported; "
                "only commutative fields are accepted"
            )
        gens = tuple(generators)
        for m in gens:
            if not isinstance(m, RatMatrix):
                raise ValidationError("algebra generators must be matrices")
            if m.rows != degree or m.cols != degree:
                raise ValidationError(
                    "algebra generator has shape %dx%d, expected %dx%d"
                    % (m.rows, m.cols, degree, degree)
                )
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if a * b != b * a:
                    raise UnsupportedModelError(
                        "algebra generators do not commute; only "
                        "commutative fields are accepted"
                    )
        self.degree = degree
        self.generators = gens
        self._basis, self._words = self._close()
        self._flat = RatMatrix.from_columns(
            [list(_flatten(b)) for b in self._basis], nrows=degree * degree
        )
        for b in self._basis:
            if b.det() == 0:
                raise UnsupportedModelError(
                    "endomorphism algebra contains a noninvertible nonzero "
                    "element, so it is not a field"
                )
        for g in gens:
            poly = _minimal_polynomial(g)
            if not _is_squarefree(poly):
                raise UnsupportedModelError(
                    "an algebra generator has a repeated factor in its "
                    "minimal polynomial (a nilpotent element), so the "
                    "algebra is not a field"
                )
            if len(poly) > 2 and _has_rational_root(poly):
                raise UnsupportedModelError(
                    "an algebra generator's minimal polynomial has a "
                    "rational root, so the algebra splits as a product "
                    "and is not a field"
                )
        self._structure = self._structure_constants()

    def _close(self):
        """Basis of the generated unital algebra, with generator words.

        Each basis element carries the tuple of generator indices whose
        product produced it; the identity carries the empty word.  The words
        let a variety model replay the same products on its point space.
        """
        basis = [RatMatrix.identity(self.degree)]
        words = [()]
        span = Subspace.from_matrix_columns(
            RatMatrix.from_columns([list(_flatten(basis[0]))],
                                   nrows=self.degree * self.degree)
        )
        queue = list(range(len(basis)))
        while queue:
            idx = queue.pop(0)
            for gi, g in enumerate(self.generators):
                cand = basis[idx] * g
                vec = _flatten(cand)
                if span.contains(vec):
                    continue
                cols = [list(_flatten(b)) for b in basis] + [list(vec)]
                span = Subspace.from_matrix_columns(
                    RatMatrix.from_columns(cols, nrows=self.degree * self.degree)
                )
                basis.append(cand)
                words.append(words[idx] + (gi,))
                queue.append(len(basis) - 1)
        return tuple(basis), tuple(words)

    @property
    def dimension(self):
        """Q-dimension of the algebra (the degree of the field over Q)."""
        return len(self._basis)

    @property
    def basis(self):
        return self._basis

    @property
    def words(self):
        return self._words

    def coordinates(self, m):
        """Coordinates of an algebra element in the closure basis."""
        coords = self._flat.solve(_flatten(m))
        if coords is None:
            raise ValidationError("matrix does not lie in the algebra")
        return coords

    def _structure_constants(self):
        """lam[t][u] = coordinates of basis[t] * basis[u]."""
        return tuple(
            tuple(self.coordinates(bt * bu) for bu in self._basis)
            for bt in self._basis
        )

    @property
    def structure_constants(self):
        return self._structure

    def __eq__(self, other):
        if not isinstance(other, EndAlgebraRep):
            return NotImplemented
        return self.degree == other.degree and self.generators == other.generators

    def __repr__(self):
        return "EndAlgebraRep(degree=%d, dimension=%d)" % (
            self.degree, self.dimension)


RATIONAL_FIELD = EndAlgebraRep(1)


class AbelianVarietyModel:
    """Declared data for an abelian variety A over a fixed base field.

    Parameters
    ----------
    name:
        Identifier used in reports and cross references.
    g:
        Dimension of the variety, a positive integer.
    end_algebra:
        An :class:`EndAlgebraRep` for End(A) tensor Q.  Defaults to Q.
    point_space_dim:
        Dimension n of the tracked point space, a Q-vector space through
        which all declared points factor.
    end_action:
        One n x n matrix per algebra generator, giving the action of the
        endomorphism algebra on the point space.  The matrices must satisfy
        every linear relation that holds among the corresponding products
        of algebra generators.
    tracked_points:
        Mapping from point names to coordinate tuples of length n.

    A model may be linked to a dual model with :func:`link_duals`, after
    which ``model.dual`` is available.  There is no polarization data here;
    pairings between a model and its dual are registered where they are
    used.
    """

    def __init__(self, name, g, end_algebra=None, point_space_dim=0,
                 end_action=(), tracked_points=None):
        if not name:
            raise ValidationError("abelian variety model needs a name")
        if g < 1:
            raise ValidationError("abelian variety dimension must be >= 1")
        if point_space_dim < 0:
            raise ValidationError("point space dimension must be >= 0")
        self.name = name
        self.g = g
        self.end_algebra = end_algebra if end_algebra is not None else RATIONAL_FIELD
        self.point_space_dim = point_space_dim
        action = tuple(end_action)
        if len(action) != len(self.end_algebra.generators):
            raise ValidationError(
                "need one point-space matrix per algebra generator "
                "(%d given, %d generators)"
                % (len(action), len(self.end_algebra.generators))
            )
        for m in action:
            if m.rows != point_space_dim or m.cols != point_space_dim:
                raise ValidationError(
                    "point-space action matrix has shape %dx%d, expected %dx%d"
                    % (m.rows, m.cols, point_space_dim, point_space_dim)
                )
        self.end_action = action
        self._point_basis = tuple(
            self._word_matrix(w) for w in self.end_algebra.words
        )
        self._check_action_relations()
        self.tracked_points = {}
        for pname, coords in (tracked_points or {}).items():
            vec = tuple(rat(c) for c in coords)
            if len(vec) != point_space_dim:
                raise ValidationError(
                    "point %r has %d coordinates, expected %d"
                    % (pname, len(vec), point_space_dim)
                )
            self.tracked_points[pname] = vec
        self._dual = None
        self._primal = None

    def _word_matrix(self, word):
        m = RatMatrix.identity(self.point_space_dim)
        for gi in word:
            m = m * self.end_action[gi]
        return m

    def _check_action_relations(self):
        """The point-space matrices must represent the same algebra.

        For every closure basis element b_t and generator g, the algebra
        product b_t * g has known coordinates in the basis; the same linear
        combination must hold among the point-space matrices.
        """
        alg = self.end_algebra
        for t, bt in enumerate(alg.basis):
            for gi, g in enumerate(alg.generators):
                coords = alg.coordinates(bt * g)
                lhs = self._point_basis[t] * self.end_action[gi]
                rhs = RatMatrix.zero(self.point_space_dim, self.point_space_dim)
                for v, c in enumerate(coords):
                    if c:
                        rhs = rhs + self._point_basis[v].scale(c)
                if lhs != rhs:
                    raise ValidationError(
                        "point-space action of %r does not satisfy the "
                        "algebra relations" % (self.name,)
                    )

    def point_matrix(self, t):
        """Point-space matrix of the t-th algebra basis element."""
        return self._point_basis[t]

    def element_point_matrix(self, coords):
        """Point-space matrix of the algebra element with given coordinates."""
        m = RatMatrix.zero(self.point_space_dim, self.point_space_dim)
        for t, c in enumerate(coords):
            c = rat(c)
            if c:
                m = m + self._point_basis[t].scale(c)
        return m

    @property
    def dual(self):
        if self._dual is None:
            raise ValidationError(
                "model %r has no dual registered; call link_duals first"
                % (self.name,)
            )
        return self._dual

    @property
    def has_dual(self):
        return self._dual is not None

    @property
    def is_primal(self):
        """Whether this model is the first member of its dual pair.

        The canonical Weil symbol of a pair takes its first argument on
        the primal member; coefficient tables are stored against that
        orientation.
        """
        if self._primal is None:
            raise ValidationError(
                "model %r has no dual registered; call link_duals first"
                % (self.name,))
        return self._primal

    def point(self, name):
        if name not in self.tracked_points:
            raise ValidationError(
                "model %r has no tracked point %r" % (self.name, name))
        return self.tracked_points[name]

    def __repr__(self):
        return "AbelianVarietyModel(%r, g=%d, n=%d)" % (
            self.name, self.g, self.point_space_dim)


def link_duals(a, b):
    """Register two models as mutually dual.

    Either model may already be linked to the other (relinking the same
    pair is a no-op); linking a model to two different duals is an error.
    A model may be self-dual: ``link_duals(a, a)`` is allowed.
    """
    already_linked = a._dual is b and b._dual is a
    for m, other in ((a, b), (b, a)):
        if m._dual is not None and m._dual is not other:
            raise ValidationError(
                "model %r is already linked to a different dual" % (m.name,))
        if m.g != other.g:
            raise ValidationError("dual abelian varieties must share g")
    a._dual = b
    b._dual = a
    if not already_linked:
        # the first member named is the primal one; relinking keeps the
        # original orientation
        a._primal = True
        b._primal = b is a


class PointVector:
    """A tuple of m points on a single abelian variety model.

    Coordinates are stored per copy: ``coords[j]`` is the point-space
    coordinate tuple of the j-th entry.
    """

    def __init__(self, variety, coords):
        rows = tuple(tuple(rat(c) for c in row) for row in coords)
        for row in rows:
            if len(row) != variety.point_space_dim:
                raise ValidationError(
                    "point entry has %d coordinates, expected %d"
                    % (len(row), variety.point_space_dim))
        self.variety = variety
        self.coords = rows

    @classmethod
    def zero(cls, variety, multiplicity):
        return cls(variety,
                   [[0] * variety.point_space_dim
                    for _ in range(multiplicity)])

    @property
    def multiplicity(self):
        return len(self.coords)

    def flat(self):
        out = []
        for row in self.coords:
            out.extend(row)
        return tuple(out)

    def __repr__(self):
        return "PointVector(%r, m=%d)" % (self.variety.name, self.multiplicity)


def relation_module(p):
    """All D-linear relations among the entries of a point vector.

    For p = (P_1, ..., P_m) on A with End(A) tensor Q = D of Q-dimension d,
    the module of relations is

        N = { phi in D^m : phi_1(P_1) + ... + phi_m(P_m) = 0 },

    returned as a Q-subspace of Q^(m*d).  Flattened coordinates are
    copy-major: position j*d + t is the coefficient of the t-th algebra
    basis element in phi_j.

    >>> A = AbelianVarietyModel("A", 1, point_space_dim=2)
    >>> n = relation_module(PointVector(A, [[1, 0], [2, 0]]))
    >>> n.dim, n.contains((-2, 1))
    (1, True)
    >>> relation_module(PointVector(A, [[1, 0], [0, 1]])).dim
    0
    """
    variety = p.variety
    d = variety.end_algebra.dimension
    m = p.multiplicity
    n = variety.point_space_dim
    cols = []
    for j in range(m):
        pj = p.coords[j]
        for t in range(d):
            cols.append(list(variety.point_matrix(t).apply(pj)))
    return kernel(RatMatrix.from_columns(cols, nrows=n))


class SubvarietyData:
    """Result of :func:`smallest_subvariety`.

    ``module`` is a Q-subspace of the flattened D^m selecting the
    subvariety { (w_1(a), ..., w_m(a)) : a in A, w in module }, and ``dim``
    is its dimension as a variety, g * dim_D(module).
    """

    def __init__(self, variety, multiplicity, module, dim):
        self.variety = variety
        self.multiplicity = multiplicity
        self.module = module
        self.dim = dim

    def contains(self, p):
        """Whether a point vector lies on the subvariety's point space.

        Membership means p is in the image of the evaluation map sending
        (w, x) with w in the module and x in the point space to
        (w_1(x), ..., w_m(x)).
        """
        if p.variety is not self.variety or p.multiplicity != self.multiplicity:
            raise ValidationError("point vector does not match the subvariety")
        variety = self.variety
        d = variety.end_algebra.dimension
        n = variety.point_space_dim
        m = self.multiplicity
        cols = []
        for w in self.module.basis_columns():
            blocks = [
                variety.element_point_matrix(w[j * d:(j + 1) * d])
                for j in range(m)
            ]
            for k in range(n):
                vec = []
                for blk in blocks:
                    vec.extend(blk.column(k))
                cols.append(vec)
        if not cols:
            return all(c == 0 for c in p.flat())
        span = Subspace.from_matrix_columns(
            RatMatrix.from_columns(cols, nrows=m * n))
        return span.contains(p.flat())

    def __repr__(self):
        return "SubvarietyData(%r, m=%d, dim=%d)" % (
            self.variety.name, self.multiplicity, self.dim)


def annihilator_module(variety, multiplicity, relations):
    """Annihilator of a Q-subspace of D^m under coordinatewise multiplication.

    Returns { w in D^m : sum_j phi_j * w_j = 0 in D for all phi } as a
    Q-subspace of the same flattened Q^(m*d).  Because D is a field, this
    is the exact annihilator of the relation module, and it is itself a
    D-submodule.
    """
    d = variety.end_algebra.dimension
    lam = variety.end_algebra.structure_constants
    m = multiplicity
    rows = []
    for phi in relations.basis_columns():
        for v in range(d):
            row = [Fraction(0)] * (m * d)
            for j in range(m):
                for u in range(d):
                    acc = Fraction(0)
                    for t in range(d):
                        c = phi[j * d + t]
                        if c:
                            acc += c * lam[t][u][v]
                    row[j * d + u] = acc
            rows.append(row)
    if not rows:
        return Subspace.full(m * d)
    return kernel(RatMatrix.from_rows(rows))


def smallest_subvariety(p):
    """The smallest abelian subvariety of A^m through a point vector.

    The subvariety is cut out by the relation module N of p: a candidate
    W = { w in D^m : w annihilates N } always contains p, and any abelian
    subvariety of A^m containing p corresponds to a D-submodule whose
    annihilator consists of relations satisfied by p, hence contains W.

    >>> A = AbelianVarietyModel("A", 1, point_space_dim=2)
    >>> smallest_subvariety(PointVector(A, [[1, 0], [2, 0]])).dim
    1
    >>> smallest_subvariety(PointVector(A, [[1, 0], [0, 1]])).dim
    2
    >>> smallest_subvariety(PointVector.zero(A, 2)).dim
    0
    """
    variety = p.variety
    d = variety.end_algebra.dimension
    m = p.multiplicity
    relations = relation_module(p)
    module = annihilator_module(variety, m, relations)
    if module.dim % d != 0:
        raise ValidationError(
            "annihilator is not a module over the endomorphism algebra")
    dim = (module.dim // d) * variety.g
    return SubvarietyData(variety, m, module, dim)
