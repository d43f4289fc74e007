"""Exact linear algebra over Q and Z.

Everything downstream runs on the three types defined here:

* ``RatMatrix``: an immutable matrix of ``fractions.Fraction`` entries.
  All arithmetic is exact; no floating point exists anywhere in the
  package.
* ``Subspace``: a subspace of Q^n, canonicalized in reduced column
  echelon form so that equality is structural.
* ``IntLattice``: a finitely generated subgroup of Z^n with a Hermite
  canonical generator matrix; ``saturate`` intersects its Q-span with
  the ambient Z^n (the "up to isogeny" normalization).

Zero-dimensional ambients are legal everywhere: degenerate inputs
(rank-0 lattices, empty point tuples) are first-class test cases, not
errors.

>>> kernel(RatMatrix.from_rows([[1, 2]])).basis_columns()
[(Fraction(-2, 1), Fraction(1, 1))]
>>> saturate(IntLattice(2, [(2, 4)])).generator_columns()
[(1, 2)]
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence


def rat(x) -> Fraction:
    """Coerce an int, string, or Fraction to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class RatMatrix:
    """An immutable rows x cols matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Iterable]) -> None:
        data = tuple(tuple(rat(x) for x in row) for row in entries)
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ValueError(f"entry grid does not match shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._entries = data

    # ----- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        return cls(nrows, ncols, rows)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: Optional[int] = None) -> "RatMatrix":
        if nrows is None:
            if not cols:
                raise ValueError("need nrows for an empty column list")
            nrows = len(cols[0])
        return cls(nrows, len(cols), [[col[i] for col in cols] for i in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    # ----- access -------------------------------------------------------

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._entries[i][j]

    def row(self, i: int) -> tuple:
        return self._entries[i]

    def column(self, j: int) -> tuple:
        return tuple(self._entries[i][j] for i in range(self.rows))

    def row_list(self) -> list:
        return [list(r) for r in self._entries]

    def column_list(self) -> list:
        return [list(self.column(j)) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._entries for x in row)

    # ----- structural ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._entries)
        return f"RatMatrix({self.rows}x{self.cols}: {body})"

    # ----- arithmetic ---------------------------------------------------

    def _same_shape(self, other: "RatMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(
            self.rows,
            self.cols,
            [
                [self._entries[i][j] + other._entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (-other)

    def __neg__(self) -> "RatMatrix":
        return self.scale(-1)

    def scale(self, q) -> "RatMatrix":
        q = rat(q)
        return RatMatrix(
            self.rows, self.cols, [[q * x for x in row] for row in self._entries]
        )

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = Fraction(0)
                for k in range(self.cols):
                    acc += self._entries[i][k] * other._entries[k][j]
                row.append(acc)
            out.append(row)
        return RatMatrix(self.rows, other.cols, out)

    def apply(self, vec: Sequence) -> tuple:
        """Multiply by a column vector, returning a tuple of Fractions."""
        v = [rat(x) for x in vec]
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum((self._entries[i][k] * v[k] for k in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols, self.rows, [self.column(j) for j in range(self.cols)]
        )

    def kron(self, other: "RatMatrix") -> "RatMatrix":
        """Kronecker product; row-major block ordering."""
        out = []
        for i in range(self.rows):
            for p in range(other.rows):
                out.append(
                    [
                        self._entries[i][j] * other._entries[p][q]
                        for j in range(self.cols)
                        for q in range(other.cols)
                    ]
                )
        return RatMatrix(self.rows * other.rows, self.cols * other.cols, out)

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return RatMatrix(
            self.rows,
            self.cols + other.cols,
            [list(self._entries[i]) + list(other._entries[i]) for i in range(self.rows)],
        )

    # ----- elimination --------------------------------------------------

    def rref(self) -> tuple:
        """Reduced row echelon form.

        Returns:
            (R, pivots) with R the RREF matrix and pivots the list of
            pivot column indices in row order.
        """
        m = [list(row) for row in self._entries]
        nrows, ncols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(ncols):
            pivot_row = None
            for i in range(r, nrows):
                if m[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(nrows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return RatMatrix(nrows, ncols, m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(row) for row in self._entries]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if m[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != c:
                m[c], m[pivot_row] = m[pivot_row], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det

    def inverse(self) -> "RatMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = self.hstack(RatMatrix.identity(n))
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return RatMatrix(n, n, [[red[i, n + j] for j in range(n)] for i in range(n)])

    def solve(self, rhs: Sequence) -> Optional[tuple]:
        """One exact solution of self·x = rhs, or None if inconsistent."""
        b = [rat(x) for x in rhs]
        if len(b) != self.rows:
            raise ValueError("right-hand side length mismatch")
        aug = self.hstack(RatMatrix.from_columns([b], nrows=self.rows))
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [Fraction(0)] * self.cols
        for r, c in enumerate(pivots):
            x[c] = red[r, self.cols]
        return tuple(x)


class Subspace:
    """A subspace of Q^n with a canonical reduced-column-echelon basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence]) -> None:
        self.ambient_dim = ambient_dim
        rows = [[rat(x) for x in v] for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        if rows:
            red, pivots = RatMatrix.from_rows(rows).rref()
            basis_cols = [red.row(i) for i in range(len(pivots))]
        else:
            basis_cols = []
        # Columns of ``basis`` are the echelon rows transposed: pivot
        # entries 1, pivot rows cleared elsewhere, ordered by pivot.
        self.basis = RatMatrix.from_columns(basis_cols, nrows=ambient_dim)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RatMatrix.identity(ambient_dim).row_list())

    @classmethod
    def from_matrix_columns(cls, m: RatMatrix) -> "Subspace":
        return cls(m.rows, m.column_list())

    @property
    def dim(self) -> int:
        return self.basis.cols

    def basis_columns(self) -> list:
        return [self.basis.column(j) for j in range(self.basis.cols)]

    def contains(self, vec: Sequence) -> bool:
        v = [rat(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        if self.dim == 0:
            return all(x == 0 for x in v)
        return self.basis.solve(v) is not None

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(col) for col in other.basis_columns())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        cols = ", ".join(
            "(" + ", ".join(str(x) for x in col) + ")" for col in self.basis_columns()
        )
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim}: {cols})"


def kernel(m: RatMatrix) -> Subspace:
    """The exact null space {v : m·v = 0} of a rational matrix."""
    red, pivots = m.rref()
    free = [c for c in range(m.cols) if c not in pivots]
    vectors = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r, f]
        vectors.append(v)
    return Subspace(m.cols, vectors)


def annihilator(s: Subspace, pairing: Optional[RatMatrix] = None) -> Subspace:
    """{w : <w, v> = 0 for all v in s} under an exact bilinear pairing.

    The pairing defaults to the dot product and must be nondegenerate,
    so dim(s) + dim(result) = ambient_dim.
    """
    n = s.ambient_dim
    if pairing is None:
        pairing = RatMatrix.identity(n)
    if pairing.rows != n or pairing.cols != n:
        raise ValueError("pairing shape does not match ambient dimension")
    if n > 0 and pairing.det() == 0:
        raise ValueError("degenerate pairing")
    # <w, v> = w^T (pairing) v, so w runs over ker((pairing · basis)^T).
    return kernel((pairing * s.basis).transpose())


def space_sum(a: Subspace, b: Subspace) -> Subspace:
    """Exact subspace sum a + b."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace(a.ambient_dim, [list(c) for c in a.basis_columns() + b.basis_columns()])


def space_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Exact subspace intersection a ∩ b."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    stacked = a.basis.hstack(b.basis.scale(-1))
    vectors = []
    for col in kernel(stacked).basis_columns():
        x = col[: a.dim]
        vectors.append(a.basis.apply(x))
    return Subspace(a.ambient_dim, vectors)


class QuotientSpace:
    """Q^k modulo the span of declared relation vectors.

    Canonical coordinates are taken at the non-pivot columns of the reduced
    relation matrix, so two presentations with the same relation span give
    bit-identical coordinates.

    >>> q = QuotientSpace(2, [(-2, 1)])   # second generator is twice the first
    >>> q.dim
    1
    >>> q.generator(0), q.generator(1)
    ((Fraction(1, 2),), (Fraction(1, 1),))
    """

    __slots__ = ("ambient_dim", "pivots", "free", "_reduced")

    def __init__(self, ambient_dim: int, relations=()):
        if ambient_dim < 0:
            raise ValueError("ambient dimension must be >= 0")
        rows = [[rat(c) for c in r] for r in relations]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError("relation length does not match ambient dimension")
        m = RatMatrix(len(rows), ambient_dim, rows)
        reduced, pivots = m.rref()
        self.ambient_dim = ambient_dim
        self.pivots = pivots
        self.free = tuple(j for j in range(ambient_dim) if j not in set(pivots))
        self._reduced = reduced

    @property
    def dim(self) -> int:
        return len(self.free)

    def project(self, vec) -> tuple:
        """Quotient coordinates of an ambient vector."""
        v = [rat(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        for r, p in enumerate(self.pivots):
            c = v[p]
            if c:
                for j in range(self.ambient_dim):
                    v[j] -= c * self._reduced[r, j]
        return tuple(v[j] for j in self.free)

    def generator(self, i: int) -> tuple:
        """Image of the i-th ambient unit vector."""
        vec = [Fraction(0)] * self.ambient_dim
        vec[i] = Fraction(1)
        return self.project(vec)


# ----- integer lattices --------------------------------------------------


def _hermite_rows(rows: list) -> list:
    """Row-style Hermite normal form of an integer row list (canonical)."""
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    out = []
    pivot_col = 0
    work = m
    while work and pivot_col < ncols:
        nonzero = [r for r in work if r[pivot_col] != 0]
        rest = [r for r in work if r[pivot_col] == 0]
        if not nonzero:
            work = rest
            pivot_col += 1
            continue
        # Euclid on the pivot column.
        while len(nonzero) > 1 or nonzero[0][pivot_col] < 0:
            nonzero.sort(key=lambda r: abs(r[pivot_col]))
            base = nonzero[0]
            if len(nonzero) == 1:
                nonzero[0] = [-x for x in base] if base[pivot_col] < 0 else base
                break
            reduced = []
            for r in nonzero[1:]:
                q = r[pivot_col] // base[pivot_col]
                newr = [a - q * b for a, b in zip(r, base)]
                if any(x != 0 for x in newr):
                    reduced.append(newr)
            nonzero = [base] + [r for r in reduced if r[pivot_col] != 0]
            rest.extend(r for r in reduced if r[pivot_col] == 0 and any(x != 0 for x in r))
        pivot = nonzero[0]
        if pivot[pivot_col] < 0:
            pivot = [-x for x in pivot]
        out.append(pivot)
        work = rest
        pivot_col += 1
    # Reduce entries above each pivot into canonical residues.
    for i in range(len(out) - 1, -1, -1):
        p = next(c for c in range(ncols) if out[i][c] != 0)
        d = out[i][p]
        for j in range(i):
            q = out[j][p] // d
            if q:
                out[j] = [a - q * b for a, b in zip(out[j], out[i])]
    return out


class IntLattice:
    """A finitely generated subgroup of Z^n, canonicalized by Hermite form."""

    __slots__ = ("ambient_rank", "generators")

    def __init__(self, ambient_rank: int, generators: Iterable[Sequence[int]]) -> None:
        self.ambient_rank = ambient_rank
        rows = []
        for g in generators:
            g = [int(x) for x in g]
            if len(g) != ambient_rank:
                raise ValueError("generator length does not match ambient rank")
            if any(x != 0 for x in g):
                rows.append(g)
        hnf = _hermite_rows(rows)
        self.generators = tuple(tuple(r) for r in hnf)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def generator_columns(self) -> list:
        return [tuple(g) for g in self.generators]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntLattice)
            and self.ambient_rank == other.ambient_rank
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return hash((self.ambient_rank, self.generators))

    def __repr__(self) -> str:
        return f"IntLattice(rank {self.rank} in Z^{self.ambient_rank}: {list(self.generators)})"

    def q_span(self) -> Subspace:
        return Subspace(self.ambient_rank, [list(g) for g in self.generators])


def smith_normal_form(m: list) -> tuple:
    """Smith normal form of an integer matrix given as a row list.

    Returns:
        (U, D, V) with U, V unimodular integer row lists and
        U·m·V = D diagonal with the divisibility chain d1 | d2 | ...
    """
    a = [list(r) for r in m]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    v = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def row_op(i, j, q):  # row i -= q * row j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col i -= q * col j
        for r in range(nrows):
            a[r][i] -= q * a[r][j]
        for r in range(ncols):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(nrows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(ncols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    t = 0
    while t < min(nrows, ncols):
        # Find the nonzero entry of least magnitude in the trailing block.
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = False
        for i in range(t + 1, nrows):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                row_op(i, t, q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, ncols):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                col_op(j, t, q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # Enforce the divisibility chain d_t | a[i][j].
        fixed = True
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if a[i][j] % a[t][t] != 0:
                    row_op(t, i, -1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            t += 1
    return u, a, v


def saturate(l: IntLattice) -> IntLattice:
    """The saturation (Q-span of l) ∩ Z^n, via Smith normal form."""
    if l.rank == 0:
        return l
    # Work with generators as columns: M = cols, U·M·V = D.
    m = [[g[i] for g in l.generators] for i in range(l.ambient_rank)]
    u, d, _ = smith_normal_form(m)
    r = sum(1 for t in range(min(len(d), len(d[0]) if d else 0)) if d[t][t] != 0)
    u_mat = RatMatrix.from_rows(u)
    u_inv = u_mat.inverse()
    cols = []
    for t in range(r):
        col = u_inv.column(t)
        if any(x.denominator != 1 for x in col):
            raise AssertionError("unimodular inverse must be integral")
        cols.append([int(x) for x in col])
    return IntLattice(l.ambient_rank, cols)
