"""Exact rational linear algebra.

Scalars are ``fractions.Fraction``.  Matrices are immutable and dense; the
spaces handled here have at most a few hundred dimensions.  Vectors are plain
tuples of Fractions.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import _backend

Scalar = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(x) -> Fraction:
    """Parse an int, Fraction or a ``"p/q"`` / ``"p"`` string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational literal")
        try:
            return Fraction(s)
        except ValueError:
            raise ValueError(f"bad rational literal {x!r}") from None
    raise TypeError(f"cannot read {x!r} as an exact rational")


def format_scalar(x: Fraction) -> str:
    return str(x)


def zero_vector(n: int) -> tuple:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> tuple:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    c = Fraction(c)
    return tuple(c * a for a in v)


def vcomb(terms, n: int) -> tuple:
    """Sum of ``c * v`` over ``(c, v)`` pairs."""
    acc = [ZERO] * n
    for c, v in terms:
        if not c:
            continue
        for i, a in enumerate(v):
            if a:
                acc[i] += c * a
    return tuple(acc)


def is_zero(v) -> bool:
    return not any(v)


def support(v) -> list[int]:
    return [i for i, a in enumerate(v) if a]


class Matrix:
    """Dense rows x cols matrix of Fractions (immutable)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence]):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("matrix shape does not match its entries")
        self.rows = rows
        self.cols = cols
        self.data = tuple(tuple(to_scalar(x) for x in r) for r in data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = list(rows)
        if cols is None:
            if not rows:
                raise ValueError("column count needed for an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        cols = len(columns)
        return cls(rows, cols, [[columns[j][i] for j in range(cols)] for i in range(rows)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [unit_vector(n, i) for i in range(n)])

    @classmethod
    def diag(cls, values) -> "Matrix":
        values = [to_scalar(v) for v in values]
        n = len(values)
        return cls(n, n, [[values[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, self.columns())

    def apply(self, v) -> tuple:
        if len(v) != self.cols:
            raise ValueError("vector length does not match matrix columns")
        nz = [(j, a) for j, a in enumerate(v) if a]
        return tuple(sum((r[j] * a for j, a in nz), ZERO) for r in self.data)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        ocols = other.columns()
        return Matrix(self.rows, other.cols,
                      [[sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in ocols]
                       for r in self.data])

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [vadd(a, b) for a, b in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [vsub(a, b) for a, b in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        return Matrix(self.rows, self.cols, [vscale(c, r) for r in self.data])

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def flatten(self) -> tuple:
        return tuple(x for r in self.data for x in r)

    @classmethod
    def unflatten(cls, flat, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [flat[i * cols:(i + 1) * cols] for i in range(rows)])

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.data]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def _rref_rows(rows: Sequence[Sequence[Fraction]], ncols: int):
    int_rows = []
    for r in rows:
        r = [to_scalar(x) for x in r]
        den = lcm(*(x.denominator for x in r)) if r else 1
        int_rows.append([x.numerator * (den // x.denominator) for x in r])
    out, pivots = _backend.rref_int(int_rows, ncols)
    reduced = []
    for row, p in zip(out, pivots):
        piv = row[p]
        reduced.append(tuple(Fraction(x, piv) if x else ZERO for x in row))
    return reduced, list(pivots)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with zero rows dropped, leftmost pivots."""
    rows, pivots = _rref_rows(m.data, m.cols)
    return Matrix(len(rows), m.cols, rows), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


class Subspace:
    """A subspace of Q^n stored by its reduced row echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivot_cols")

    def __init__(self, ambient_dim: int, basis: Matrix, pivot_cols: Sequence[int]):
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivot_cols = tuple(pivot_cols)

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vectors = [v for v in vectors if any(v)]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        rows, pivots = _rref_rows(vectors, ambient_dim)
        return cls(ambient_dim, Matrix(len(rows), ambient_dim, rows), pivots)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix(0, n, []), [])

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n), range(n))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[tuple]:
        return list(self.basis.data)

    def reduce(self, v) -> tuple:
        """Remainder of ``v`` after clearing every pivot column."""
        v = list(v)
        for row, p in zip(self.basis.data, self.pivot_cols):
            c = v[p]
            if c:
                for k, a in enumerate(row):
                    if a:
                        v[k] -= c * a
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v) -> tuple:
        """Coordinates of ``v`` in the echelon basis; raises if ``v`` is outside."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivot_cols)

    def from_coordinates(self, coords) -> tuple:
        return vcomb(zip(coords, self.basis.data), self.ambient_dim)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.vectors() + other.vectors(), self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        # x = sum a_i u_i = sum b_j w_j; solve on the stacked columns
        k = self.dim
        cols = self.vectors() + [vscale(-1, w) for w in other.vectors()]
        if not cols:
            return Subspace.zero(self.ambient_dim)
        sol = kernel(Matrix.from_columns(cols, self.ambient_dim))
        vecs = [vcomb(zip(s[:k], self.basis.data), self.ambient_dim) for s in sol.vectors()]
        return Subspace.span(vecs, self.ambient_dim)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis.data)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim})"


def kernel(m: Matrix) -> Subspace:
    """Basis of {x : m x = 0}, returned in echelon form."""
    r, pivots = rref(m)
    n = m.cols
    free = [j for j in range(n) if j not in set(pivots)]
    vecs = []
    for fj in free:
        v = [ZERO] * n
        v[fj] = ONE
        for row, p in zip(r.data, pivots):
            v[p] = -row[fj]
        vecs.append(v)
    return Subspace.span(vecs, n)


def quotient_complement(relations: Subspace) -> tuple[list[int], Matrix]:
    """Canonical complement of a subspace and the projection onto it.

    The representatives are the non-pivot coordinates.  Column ``j`` of the
    projection is the class of the ambient basis vector ``e_j`` written in
    those representatives.
    """
    n = relations.ambient_dim
    piv = set(relations.pivot_cols)
    reps = [j for j in range(n) if j not in piv]
    pos = {j: i for i, j in enumerate(reps)}
    cols = []
    for j in range(n):
        col = [ZERO] * len(reps)
        if j in pos:
            col[pos[j]] = ONE
        else:
            row = relations.basis.data[relations.pivot_cols.index(j)]
            for r, i in pos.items():
                col[i] = -row[r]
        cols.append(col)
    if not reps:
        return reps, Matrix(0, n, [])
    return reps, Matrix.from_columns(cols, len(reps))


def eigenspace(m: Matrix, lam) -> Subspace:
    if m.rows != m.cols:
        raise ValueError("eigenspace needs a square matrix")
    return kernel(m - Matrix.identity(m.rows).scale(to_scalar(lam)))


def solve(m: Matrix, b) -> tuple | None:
    """One solution of ``m x = b`` (free variables set to zero), or None."""
    aug = Matrix(m.rows, m.cols + 1, [list(r) + [to_scalar(x)] for r, x in zip(m.data, b)])
    r, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for row, p in zip(r.data, pivots):
        x[p] = row[-1]
    return tuple(x)
