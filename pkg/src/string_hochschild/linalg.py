"""Exact linear algebra over the rationals or a prime field.

Everything downstream (kernel dimensions, cohomology classes, witness
verification) must be exact, so scalars are ``fractions.Fraction`` in
characteristic 0 and least nonnegative residues mod p otherwise.  Matrices
are assembled sparsely; elimination runs on dense row lists because the
spaces involved stay small.

Ranks in characteristic 0 go through fraction-free (Bareiss) elimination on
an integer-scaled copy to keep the intermediate arithmetic cheap; a naive
rational elimination is kept alongside as a cross-check.  Subspaces are
stored in reduced row echelon form with increasing pivot columns, which
makes every basis canonical: two computations of the same subspace produce
identical objects, and reduction mod a subspace gives a canonical coset
representative.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Scalar = Fraction | int


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """The rationals (characteristic 0) or the prime field GF(p)."""

    def __init__(self, characteristic: int):
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {characteristic}")
        self.characteristic = characteristic

    def __repr__(self) -> str:
        return f"FieldSpec({self.characteristic})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.characteristic))

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.characteristic == 0 else 1

    def from_int(self, n: int) -> Scalar:
        if self.characteristic == 0:
            return Fraction(n)
        return n % self.characteristic

    def add(self, x: Scalar, y: Scalar) -> Scalar:
        z = x + y
        return z if self.characteristic == 0 else z % self.characteristic

    def sub(self, x: Scalar, y: Scalar) -> Scalar:
        z = x - y
        return z if self.characteristic == 0 else z % self.characteristic

    def mul(self, x: Scalar, y: Scalar) -> Scalar:
        z = x * y
        return z if self.characteristic == 0 else z % self.characteristic

    def neg(self, x: Scalar) -> Scalar:
        return -x if self.characteristic == 0 else (-x) % self.characteristic

    def inv(self, x: Scalar) -> Scalar:
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return Fraction(1) / x
        return pow(x, self.characteristic - 2, self.characteristic)

    def div(self, x: Scalar, y: Scalar) -> Scalar:
        return self.mul(x, self.inv(y))

    def is_zero(self, x: Scalar) -> bool:
        return x == 0

    def fmt(self, x: Scalar) -> str:
        return str(x)


class SparseMatrix:
    """A rows-by-cols matrix storing only nonzero entries."""

    def __init__(self, rows: int, cols: int, field: FieldSpec):
        self.rows = rows
        self.cols = cols
        self.field = field
        self.entries: dict[tuple[int, int], Scalar] = {}

    def add_to(self, r: int, c: int, v: Scalar) -> None:
        assert 0 <= r < self.rows and 0 <= c < self.cols, (r, c, self.rows, self.cols)
        cur = self.field.add(self.entries.get((r, c), self.field.zero), v)
        if self.field.is_zero(cur):
            self.entries.pop((r, c), None)
        else:
            self.entries[(r, c)] = cur

    def get(self, r: int, c: int) -> Scalar:
        return self.entries.get((r, c), self.field.zero)

    def is_zero(self) -> bool:
        return not self.entries

    def dense_rows(self) -> list[list[Scalar]]:
        zero = self.field.zero
        rows = [[zero] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def column(self, c: int) -> list[Scalar]:
        zero = self.field.zero
        col = [zero] * self.rows
        for (r, cc), v in self.entries.items():
            if cc == c:
                col[r] = v
        return col

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        assert self.cols == other.rows and self.field == other.field
        out = SparseMatrix(self.rows, other.cols, self.field)
        by_row: dict[int, list[tuple[int, Scalar]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, []):
                out.add_to(r, c, self.field.mul(v, w))
        return out

    def apply(self, vec: list[Scalar]) -> list[Scalar]:
        assert len(vec) == self.cols
        f = self.field
        out = [f.zero] * self.rows
        for (r, c), v in self.entries.items():
            if not f.is_zero(vec[c]):
                out[r] = f.add(out[r], f.mul(v, vec[c]))
        return out

    def submatrix_columns(self, cols: list[int]) -> "SparseMatrix":
        """Column-selected copy (used to restrict a map to a span of basis
        vectors of its source)."""
        pos = {c: i for i, c in enumerate(cols)}
        out = SparseMatrix(self.rows, len(cols), self.field)
        for (r, c), v in self.entries.items():
            if c in pos:
                out.add_to(r, pos[c], v)
        return out


# ----------------------------------------------------------------------
# elimination


def _rref(rows: list[list[Scalar]], field: FieldSpec) -> tuple[list[list[Scalar]], list[int]]:
    """In-place reduced row echelon form; returns (nonzero rows, pivot cols).

    Pivoting is deterministic: the first row with a nonzero entry in the
    current column wins.  Pivot columns come out strictly increasing and
    each pivot is 1 with zeros above and below.
    """
    f = field
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        sel = None
        for r in range(top, len(rows)):
            if not f.is_zero(rows[r][col]):
                sel = r
                break
        if sel is None:
            continue
        rows[top], rows[sel] = rows[sel], rows[top]
        inv = f.inv(rows[top][col])
        rows[top] = [f.mul(inv, x) for x in rows[top]]
        for r in range(len(rows)):
            if r != top and not f.is_zero(rows[r][col]):
                factor = rows[r][col]
                rows[r] = [f.sub(x, f.mul(factor, y)) for x, y in zip(rows[r], rows[top])]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def _integer_rows(rows: list[list[Fraction]]) -> list[list[int]]:
    out: list[list[int]] = []
    for row in rows:
        denom = lcm(*(x.denominator for x in row)) if row else 1
        ints = [int(x * denom) for x in row]
        g = 0
        for x in ints:
            g = gcd(g, abs(x))
        if g > 1:
            ints = [x // g for x in ints]
        out.append(ints)
    return out


def _bareiss_rank(rows: list[list[int]]) -> int:
    """Fraction-free elimination rank over the integers."""
    m = [row[:] for row in rows if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        sel = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        m[rank], m[sel] = m[sel], m[rank]
        for r in range(rank + 1, len(m)):
            for c in range(col + 1, ncols):
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = m[rank][col]
        rank += 1
        if rank == len(m):
            break
    return rank


def rank(matrix: SparseMatrix) -> int:
    """Exact rank; characteristic 0 goes through fraction-free elimination."""
    if not matrix.entries:
        return 0
    if matrix.field.characteristic == 0:
        return _bareiss_rank(_integer_rows(matrix.dense_rows()))
    _, pivots = _rref(matrix.dense_rows(), matrix.field)
    return len(pivots)


def rank_naive(matrix: SparseMatrix) -> int:
    """Rank by plain field elimination (cross-check for ``rank``)."""
    _, pivots = _rref(matrix.dense_rows(), matrix.field)
    return len(pivots)


class SubspaceBasis:
    """A subspace in canonical form: RREF rows with increasing pivots."""

    def __init__(self, ambient: int, field: FieldSpec, rows: list[list[Scalar]], pivots: list[int]):
        self.ambient = ambient
        self.field = field
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def from_vectors(
        cls, vectors: list[list[Scalar]], ambient: int, field: FieldSpec
    ) -> "SubspaceBasis":
        assert all(len(v) == ambient for v in vectors)
        rows, pivots = _rref([v[:] for v in vectors], field)
        return cls(ambient, field, rows, pivots)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: list[Scalar]) -> list[Scalar]:
        """Canonical coset representative: zero out every pivot coordinate.

        Linear in ``vec``, idempotent, and the result is zero exactly when
        the vector lies in the subspace.
        """
        assert len(vec) == self.ambient
        f = self.field
        out = vec[:]
        for row, p in zip(self.rows, self.pivots):
            c = out[p]
            if not f.is_zero(c):
                out = [f.sub(x, f.mul(c, y)) for x, y in zip(out, row)]
        return out

    def contains(self, vec: list[Scalar]) -> bool:
        return all(self.field.is_zero(x) for x in self.reduce(vec))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SubspaceBasis)
            and self.ambient == other.ambient
            and self.field == other.field
            and self.pivots == other.pivots
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient})"


def reduce_mod(subspace: SubspaceBasis, vec: list[Scalar]) -> list[Scalar]:
    return subspace.reduce(vec)


def kernel_basis(matrix: SparseMatrix) -> SubspaceBasis:
    """Canonical basis of the right kernel {v : Mv = 0}."""
    f = matrix.field
    rows, pivots = _rref(matrix.dense_rows(), f)
    pivot_set = set(pivots)
    free = [c for c in range(matrix.cols) if c not in pivot_set]
    vectors: list[list[Scalar]] = []
    for fc in free:
        v = [f.zero] * matrix.cols
        v[fc] = f.one
        for row, p in zip(rows, pivots):
            v[p] = f.neg(row[fc])
        vectors.append(v)
    return SubspaceBasis.from_vectors(vectors, matrix.cols, f)


def column_space_basis(matrix: SparseMatrix) -> SubspaceBasis:
    """Canonical basis of the image {Mv}."""
    cols = [matrix.column(c) for c in range(matrix.cols)]
    return SubspaceBasis.from_vectors(cols, matrix.rows, matrix.field)
