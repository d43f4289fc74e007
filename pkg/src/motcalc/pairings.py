"""Torus-valued bilinear classes on block coordinate spaces.

Biextensions of split weight-graded objects by tori are classified by
bilinear maps into the torus's cocharacter lattice, so this module works
with classes only: a :class:`TorusPairingClass` is a block bilinear form
with values in a lattice L, standing for a biextension by the torus L(1).

A block space is a labeled direct sum of coordinate blocks.  An "abelian"
block is Q^m tensor a variety model (m independent copies of the variety);
a "torus" block is a plain Q^m.  Between an abelian block and a block of
the dual variety the only available pairing is a rational multiple of the
canonical Weil symbol, written <a, b> with the first argument on the
primal variety of the registered dual pair.  The stored coefficient
matrices are always expressed against that fixed orientation, whichever
side of the form holds the primal variety.  Pairings between abelian
blocks of non-dual varieties, or between an abelian and a torus block,
vanish for weight reasons and are rejected.

Sign conventions, fixed once and used everywhere:

* the swap pullback of a class c is s*c = -(c o swap): transposing the
  arguments of a biextension changes the classifying map by a sign;
* antisymmetrize(c) = c + s*c, except that a class already fixed by s*
  is returned unchanged, making the operation idempotent (dividing by 2
  is always permitted under the isogeny convention);
* the wedge of two classes with the same spaces and target is their sum.
"""

from .errors import ValidationError
from .exactlin import RatMatrix
from .lattices import GaloisLattice


class CoordinateBlock:
    """One summand of a block space: m copies of a variety, or Q^m."""

    __slots__ = ("kind", "variety", "dim", "label")

    def __init__(self, kind, dim, variety=None, label=None):
        if kind not in ("abelian", "torus"):
            raise ValidationError("block kind must be 'abelian' or 'torus'")
        if dim < 0:
            raise ValidationError("block dimension must be >= 0")
        if kind == "abelian":
            if variety is None:
                raise ValidationError("abelian block needs a variety model")
        elif variety is not None:
            raise ValidationError("torus block takes no variety")
        self.kind = kind
        self.variety = variety
        self.dim = dim
        self.label = label

    def __eq__(self, other):
        if not isinstance(other, CoordinateBlock):
            return NotImplemented
        return (self.kind == other.kind and self.variety is other.variety
                and self.dim == other.dim)

    def __repr__(self):
        if self.kind == "abelian":
            return "CoordinateBlock(%s^%d)" % (self.variety.name, self.dim)
        return "CoordinateBlock(%s, dim=%d)" % (self.label or "torus", self.dim)


def abelian_block(variety, copies, label=None):
    return CoordinateBlock("abelian", copies, variety=variety, label=label)


def torus_block(dim, label=None):
    return CoordinateBlock("torus", dim, label=label)


class BlockSpace:
    """A labeled direct sum of coordinate blocks."""

    __slots__ = ("blocks", "offsets", "total_dim")

    def __init__(self, blocks=()):
        self.blocks = tuple(blocks)
        offsets = []
        total = 0
        for b in self.blocks:
            offsets.append(total)
            total += b.dim
        self.offsets = tuple(offsets)
        self.total_dim = total

    def __eq__(self, other):
        if not isinstance(other, BlockSpace):
            return NotImplemented
        return self.blocks == other.blocks

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return "BlockSpace(%r)" % (list(self.blocks),)


def _dual_pair_ok(a, b):
    """Whether two abelian blocks may carry a Weil symbol entry."""
    return a.variety.has_dual and a.variety.dual is b.variety


class TorusPairingClass:
    """A block bilinear form with values in a cocharacter lattice.

    ``coefficients`` maps (target component l, left block p, right block q)
    to a rational matrix of shape (left block dim, right block dim).  An
    absent key is the zero form; zero matrices are dropped on entry, so
    structural equality compares normalized tables.
    """

    __slots__ = ("left_space", "right_space", "target", "coefficients")

    def __init__(self, left_space, right_space, target, coefficients=None):
        if not isinstance(target, GaloisLattice):
            raise ValidationError("target must be a Galois lattice")
        self.left_space = left_space
        self.right_space = right_space
        self.target = target
        table = {}
        for key, mat in (coefficients or {}).items():
            l, p, q = key
            if not 0 <= l < target.rank:
                raise ValidationError("target component %r out of range" % (l,))
            if not 0 <= p < len(left_space.blocks):
                raise ValidationError("left block %r out of range" % (p,))
            if not 0 <= q < len(right_space.blocks):
                raise ValidationError("right block %r out of range" % (q,))
            left = left_space.blocks[p]
            right = right_space.blocks[q]
            if mat.rows != left.dim or mat.cols != right.dim:
                raise ValidationError(
                    "entry (%d, %d, %d) has shape %dx%d, expected %dx%d"
                    % (l, p, q, mat.rows, mat.cols, left.dim, right.dim))
            if mat.is_zero():
                continue
            if left.kind == "abelian" and right.kind == "abelian":
                if not _dual_pair_ok(left, right):
                    raise ValidationError(
                        "nonzero pairing between non-dual abelian blocks "
                        "(%r, %r) vanishes for weight reasons"
                        % (left, right))
            elif left.kind != right.kind:
                raise ValidationError(
                    "nonzero pairing between an abelian and a torus block "
                    "vanishes for weight reasons")
            table[(l, p, q)] = mat
        self.coefficients = table

    def entry(self, l, p, q):
        """Coefficient matrix at (component, left block, right block)."""
        key = (l, p, q)
        if key in self.coefficients:
            return self.coefficients[key]
        return RatMatrix.zero(self.left_space.blocks[p].dim,
                              self.right_space.blocks[q].dim)

    def component_form(self, l):
        """All nonzero block entries of one target component."""
        return {(p, q): mat for (l2, p, q), mat in self.coefficients.items()
                if l2 == l}

    def is_zero(self):
        return not self.coefficients

    def __eq__(self, other):
        if not isinstance(other, TorusPairingClass):
            return NotImplemented
        return (self.left_space == other.left_space
                and self.right_space == other.right_space
                and self.target == other.target
                and self.coefficients == other.coefficients)

    def __add__(self, other):
        if (self.left_space != other.left_space
                or self.right_space != other.right_space
                or self.target != other.target):
            raise ValidationError("classes live on different spaces")
        table = dict(self.coefficients)
        for key, mat in other.coefficients.items():
            total = table[key] + mat if key in table else mat
            if total.is_zero():
                table.pop(key, None)
            else:
                table[key] = total
        return TorusPairingClass(self.left_space, self.right_space,
                                 self.target, table)

    def scale(self, c):
        table = {key: mat.scale(c) for key, mat in self.coefficients.items()}
        return TorusPairingClass(self.left_space, self.right_space,
                                 self.target, table)

    def __repr__(self):
        return "TorusPairingClass(%d entries, target rank %d)" % (
            len(self.coefficients), self.target.rank)


class SigmaTorsorClass:
    """The quadratic class of a torsor over a Sigma-structure.

    Produced only by :func:`diagonal_restrict`; carries the restricted
    bilinear class unchanged, tagged as living on the diagonal.
    """

    __slots__ = ("base", "quadratic_class")

    def __init__(self, base, quadratic_class):
        self.base = base
        self.quadratic_class = quadratic_class

    def __eq__(self, other):
        if not isinstance(other, SigmaTorsorClass):
            return NotImplemented
        return (self.base == other.base
                and self.quadratic_class == other.quadratic_class)

    def __repr__(self):
        return "SigmaTorsorClass(base dim %d)" % (self.base.total_dim,)


def swap_pullback(c):
    """The class of the argument-swapped biextension, s*c = -(c o swap)."""
    table = {}
    for (l, p, q), mat in c.coefficients.items():
        table[(l, q, p)] = mat.transpose().scale(-1)
    return TorusPairingClass(c.right_space, c.left_space, c.target, table)


def antisymmetrize(c):
    """The antisymmetrized class c(x, y) - c(y, x), normalized idempotently.

    A class already fixed by the swap pullback is returned unchanged;
    otherwise the result is c + s*c, which is fixed by the swap pullback.
    """
    if c.left_space != c.right_space:
        raise ValidationError("antisymmetrize needs equal left and right spaces")
    swapped = swap_pullback(c)
    if swapped == c:
        return c
    return c + swapped


def wedge(a, b):
    """The wedge of two classes on the same spaces: the class sum."""
    return a + b


def diagonal_restrict(c):
    """Restrict a class on S x S to the diagonal as a quadratic torsor class."""
    if c.left_space != c.right_space:
        raise ValidationError("diagonal restriction needs equal spaces")
    return SigmaTorsorClass(c.left_space, c)


def poincare_class(a):
    """The canonical Weil pairing class A x A* -> Z(1), coefficient 1."""
    if a is None:
        raise ValidationError("poincare_class needs an abelian variety model")
    if not a.has_dual:
        raise ValidationError(
            "model %r has no registered dual" % (a.name,))
    left = BlockSpace([abelian_block(a, 1)])
    right = BlockSpace([abelian_block(a.dual, 1)])
    target = GaloisLattice(1)
    return TorusPairingClass(
        left, right, target, {(0, 0, 0): RatMatrix.identity(1)})


def assemble_example_biext(x, y, a):
    """The explicit biextension class on (A^x + (A*)^y)^2 valued in Z^(x*y)(1).

    Target component (i, j) is flattened to l = i*y + j.  Its only nonzero
    blocks are the Weil symbol between the i-th copy of A and the j-th
    copy of A* (coefficient +1) and its swapped role between the j-th copy
    of A* and the i-th copy of A (coefficient -1, the swap sign rule), so
    the class is already fixed by the swap pullback.
    """
    if x < 1 or y < 1:
        raise ValidationError("assemble_example_biext needs x >= 1 and y >= 1")
    if a is None or not a.has_dual:
        raise ValidationError("assemble_example_biext needs a registered dual pair")
    space = BlockSpace([abelian_block(a, x), abelian_block(a.dual, y)])
    target = GaloisLattice(x * y)
    table = {}
    for i in range(x):
        for j in range(y):
            l = i * y + j
            forward = [[0] * y for _ in range(x)]
            forward[i][j] = 1
            table[(l, 0, 1)] = RatMatrix.from_rows(forward)
            backward = [[0] * x for _ in range(y)]
            backward[j][i] = -1
            table[(l, 1, 0)] = RatMatrix.from_rows(backward)
    return TorusPairingClass(space, space, target, table)


def _block_slices(space):
    return [(space.offsets[k], space.offsets[k] + space.blocks[k].dim)
            for k in range(len(space.blocks))]


def _submatrix(m, row_range, col_range):
    rows = []
    for i in range(row_range[0], row_range[1]):
        rows.append([m[i, j] for j in range(col_range[0], col_range[1])])
    return RatMatrix(row_range[1] - row_range[0],
                     col_range[1] - col_range[0], rows)


def pullback(c, f_left, f_right, left_space=None, right_space=None):
    """Substitute coordinates: the class (u, w) -> c(f_left u, f_right w).

    ``f_left`` maps new left coordinates into the old left coordinate
    space (old_total_dim x new_total_dim), and likewise on the right.  The
    new block structures default to the old ones (so an endomorphism-shaped
    substitution needs no extra data); pass ``left_space``/``right_space``
    to restrict to smaller blocks.  Each new block must map into old
    blocks of the same kind and variety.
    """
    new_left = left_space if left_space is not None else c.left_space
    new_right = right_space if right_space is not None else c.right_space
    if f_left.rows != c.left_space.total_dim or f_left.cols != new_left.total_dim:
        raise ValidationError("left substitution matrix has the wrong shape")
    if f_right.rows != c.right_space.total_dim or f_right.cols != new_right.total_dim:
        raise ValidationError("right substitution matrix has the wrong shape")
    _check_block_structure(f_left, c.left_space, new_left, "left")
    _check_block_structure(f_right, c.right_space, new_right, "right")
    old_left = _block_slices(c.left_space)
    old_right = _block_slices(c.right_space)
    nl = _block_slices(new_left)
    nr = _block_slices(new_right)
    table = {}
    for (l, p, q), mat in c.coefficients.items():
        for p2 in range(len(new_left.blocks)):
            lm = _submatrix(f_left, old_left[p], nl[p2])
            if lm.is_zero():
                continue
            for q2 in range(len(new_right.blocks)):
                rm = _submatrix(f_right, old_right[q], nr[q2])
                if rm.is_zero():
                    continue
                piece = lm.transpose() * mat * rm
                key = (l, p2, q2)
                total = table[key] + piece if key in table else piece
                if total.is_zero():
                    table.pop(key, None)
                else:
                    table[key] = total
    return TorusPairingClass(new_left, new_right, c.target, table)


def _check_block_structure(f, old_space, new_space, side):
    """Each new block's columns may hit only matching old blocks."""
    old = _block_slices(old_space)
    new = _block_slices(new_space)
    for k2, nb in enumerate(new_space.blocks):
        for k, ob in enumerate(old_space.blocks):
            if ob.kind == nb.kind and ob.variety is nb.variety:
                continue
            sub = _submatrix(f, old[k], new[k2])
            if not sub.is_zero():
                raise ValidationError(
                    "%s substitution mixes incompatible blocks %r -> %r"
                    % (side, nb, ob))


def pushforward_character(c, proj, target=None):
    """Push the target coordinates along a lattice projection.

    ``proj`` has one row per new target component and one column per old
    component; the new coefficient family is the proj-weighted combination
    of the old one.  The new target lattice defaults to the trivial-action
    lattice of the matching rank.
    """
    if proj.cols != c.target.rank:
        raise ValidationError("projection matrix does not match target rank")
    new_target = target if target is not None else GaloisLattice(proj.rows)
    if new_target.rank != proj.rows:
        raise ValidationError("projection matrix does not match new target rank")
    table = {}
    for (l, p, q), mat in c.coefficients.items():
        for l2 in range(proj.rows):
            w = proj[l2, l]
            if not w:
                continue
            key = (l2, p, q)
            piece = mat.scale(w)
            total = table[key] + piece if key in table else piece
            if total.is_zero():
                table.pop(key, None)
            else:
                table[key] = total
    return TorusPairingClass(c.left_space, c.right_space, new_target, table)
