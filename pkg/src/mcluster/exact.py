"""Exact linear algebra over the rationals.

Everything in the package that looks like a number is a ``fractions.Fraction``;
no floating point arithmetic is used anywhere.  Matrices are small (a few
dozen rows at most), so a dense representation with textbook Gauss-Jordan
elimination is entirely adequate and keeps the results reproducible: every
echelon form is the *reduced* row echelon form, and every kernel basis is the
standard one read off from the free columns in ascending order.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Matrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        grid = tuple(tuple(_frac(x) for x in row) for row in entries)
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ValueError("entry grid does not match the declared shape")
        self.rows = rows
        self.cols = cols
        self.entries = grid

    @classmethod
    def from_rows(cls, entries) -> "Matrix":
        entries = [list(r) for r in entries]
        rows = len(entries)
        cols = len(entries[0]) if entries else 0
        return cls(rows, cols, entries)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {[list(r) for r in self.entries]})"

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            left = self.entries[i]
            for j in range(other.cols):
                s = ZERO
                for k in range(self.cols):
                    a = left[k]
                    if a:
                        s += a * other.entries[k][j]
                row.append(s)
            out.append(row)
        return Matrix(self.rows, other.cols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(
            self.rows,
            self.cols,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        return Matrix(self.rows, self.cols, [[c * x for x in r] for r in self.entries])

    def apply(self, vec) -> tuple:
        """Multiply by a column vector given as a sequence."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(
            sum((row[k] * vec[k] for k in range(self.cols) if vec[k]), ZERO)
            for row in self.entries
        )

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def rank(self) -> int:
        return len(rref(list(self.entries))[1])

    def kernel_basis(self):
        return kernel_basis(self.entries, self.cols)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices can be inverted")
        n = self.rows
        aug = [list(self.entries[i]) + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
        reduced, pivots = rref(aug)
        if len(pivots) < n or any(p >= n for p in pivots):
            raise ValueError("matrix is singular")
        return Matrix(n, n, [row[n:] for row in reduced])


def rref(rows):
    """Reduced row echelon form.

    Returns ``(rows, pivot_columns)`` where ``rows`` is a fresh list of lists.
    Zero rows are moved to the bottom and kept (callers slice by pivot count).
    """
    m = [list(map(_frac, row)) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank_of(vectors) -> int:
    vectors = [v for v in vectors if any(x != 0 for x in v)]
    if not vectors:
        return 0
    return len(rref(vectors)[1])


def row_space_basis(vectors):
    """Canonical (RREF) basis of the span of the given row vectors."""
    vectors = [v for v in vectors if any(x != 0 for x in v)]
    if not vectors:
        return []
    reduced, pivots = rref(vectors)
    return [tuple(reduced[i]) for i in range(len(pivots))]


def reduce_mod(vector, basis, pivots):
    """Reduce ``vector`` against an RREF ``basis`` with known pivot columns."""
    v = list(map(_frac, vector))
    for row, p in zip(basis, pivots):
        if v[p] != 0:
            f = v[p]
            v = [x - f * y for x, y in zip(v, row)]
    return tuple(v)


def in_span(vector, basis, pivots) -> bool:
    return all(x == 0 for x in reduce_mod(vector, basis, pivots))


def kernel_basis(rows, ncols: int):
    """Basis of the null space ``{x : A x = 0}`` as a list of tuples.

    Deterministic: one vector per free column of the RREF, in ascending
    column order, with a 1 in the free coordinate.
    """
    reduced, pivots = rref(list(rows))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for row, p in zip(reduced, pivots):
            vec[p] = -row[fc]
        basis.append(tuple(vec))
    return basis


def solve(rows, rhs):
    """One particular solution of ``A x = b``, or ``None`` if inconsistent."""
    m = [list(map(_frac, row)) + [_frac(b)] for row, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    reduced, pivots = rref(m)
    for i in range(len(pivots), len(reduced)):
        if reduced[i][ncols] != 0:
            return None
    if any(p == ncols for p in pivots):
        return None
    x = [ZERO] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return tuple(x)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c, v):
    c = _frac(c)
    return tuple(c * x for x in v)


def vec_is_zero(v) -> bool:
    return all(x == 0 for x in v)
