"""Exact dense linear algebra over the rationals.

Scalars are `fractions.Fraction` (arbitrary precision, kept in lowest terms
with positive denominator), so nothing here ever rounds.  Matrices are
immutable tuples of tuples and every operation is a pure function; values can
be shared between threads or worker processes without synchronization.

Inversion runs a fraction-free (Bareiss) forward elimination on an
integer-scaled copy to keep intermediate entries from blowing up, then
back-substitutes exactly.  All matrices in this project are small (at most a
few hundred rows), so dense storage is fine.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionError, InputError, InternalCheckError, SingularMatrixError

Rat = Fraction


def _rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Mat:
    """Immutable matrix of exact rationals."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(_rat(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and one column")
        ncols = len(rows[0])
        if any(len(row) != ncols for row in rows):
            raise DimensionError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Mat":
        return cls([[Fraction(0)] * ncols for _ in range(nrows)])

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence]) -> "Mat":
        return cls(list(zip(*cols)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Mat[{body}]"

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.rows[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "Mat":
        return Mat(zip(*self.rows))

    def trace(self) -> Fraction:
        if not self.is_square():
            raise DimensionError(f"trace of non-square {self.shape}")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def scale(self, c) -> "Mat":
        c = _rat(c)
        return Mat([[c * x for x in row] for row in self.rows])

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise DimensionError(f"add {self.shape} to {other.shape}")
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise DimensionError(f"subtract {other.shape} from {self.shape}")
        return Mat([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other: "Mat") -> "Mat":
        return mat_mul(self, other)

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        v = [_rat(x) for x in v]
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} against {self.shape}")
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.rows)

    def int_rows(self) -> tuple[tuple[int, ...], ...]:
        """Rows as Python ints; raises if any entry is not an integer."""
        out = []
        for row in self.rows:
            for x in row:
                if x.denominator != 1:
                    raise InputError(f"non-integer entry {x}")
            out.append(tuple(int(x) for x in row))
        return tuple(out)


def mat_mul(a: Mat, b: Mat) -> Mat:
    """Exact matrix product."""
    if a.ncols != b.nrows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    bt = b.transpose().rows
    return Mat(
        [
            [sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt]
            for row in a.rows
        ]
    )


def mat_pow(a: Mat, n: int) -> Mat:
    """a**n by repeated squaring; a**0 is the identity."""
    if not a.is_square():
        raise DimensionError(f"power of non-square {a.shape}")
    if n < 0:
        raise InputError("negative matrix power")
    result = Mat.identity(a.nrows)
    base = a
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base_needed = n >> 1
        if base_needed:
            base = mat_mul(base, base)
        n = base_needed
    return result


def _check_triangular_solve_args(t: Mat, v: Sequence) -> list[Fraction]:
    if not t.is_square():
        raise DimensionError(f"triangular solve with non-square {t.shape}")
    v = [_rat(x) for x in v]
    if len(v) != t.nrows:
        raise DimensionError("right-hand side length mismatch")
    return v


def solve_upper_triangular(u: Mat, v: Sequence) -> tuple[Fraction, ...]:
    """Back-substitution: exact x with u·x = v for upper triangular u."""
    v = _check_triangular_solve_args(u, v)
    n = u.nrows
    for i in range(n):
        if any(u.rows[i][j] != 0 for j in range(i)):
            raise InputError("matrix is not upper triangular")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        pivot = u.rows[i][i]
        if pivot == 0:
            raise SingularMatrixError(f"zero diagonal entry at {i}")
        s = v[i] - sum((u.rows[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        x[i] = s / pivot
    return tuple(x)


def solve_lower_triangular(l: Mat, v: Sequence) -> tuple[Fraction, ...]:
    """Forward substitution: exact x with l·x = v for lower triangular l."""
    v = _check_triangular_solve_args(l, v)
    n = l.nrows
    for i in range(n):
        if any(l.rows[i][j] != 0 for j in range(i + 1, n)):
            raise InputError("matrix is not lower triangular")
    x = [Fraction(0)] * n
    for i in range(n):
        pivot = l.rows[i][i]
        if pivot == 0:
            raise SingularMatrixError(f"zero diagonal entry at {i}")
        s = v[i] - sum((l.rows[i][j] * x[j] for j in range(i)), Fraction(0))
        x[i] = s / pivot
    return tuple(x)


def _integer_scaled_rows(a: Mat) -> tuple[list[list[int]], list[int]]:
    """Each row multiplied by the lcm of its denominators; returns (rows, scales)."""
    rows, scales = [], []
    for row in a.rows:
        d = lcm(*[x.denominator for x in row]) if a.ncols > 1 else row[0].denominator
        scales.append(d)
        rows.append([x.numerator * (d // x.denominator) for x in row])
    return rows, scales


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalCheckError("fraction-free elimination produced a non-exact division")
    return q


def inverse(a: Mat) -> Mat:
    """Exact inverse via fraction-free (Bareiss) elimination.

    Rows are scaled to integers, the forward sweep is Bareiss-style (every
    division is exact), and the triangular system is back-substituted over
    Fraction.  Raises SingularMatrixError if a has no inverse.
    """
    if not a.is_square():
        raise DimensionError(f"inverse of non-square {a.shape}")
    n = a.nrows
    left, scales = _integer_scaled_rows(a)
    # Augment with diag(scales): inverting diag(d)·a and rescaling would be the
    # same thing; carrying d_i on the right keeps everything integral.
    aug = [left[i] + [scales[i] * int(i == j) for j in range(n)] for i in range(n)]
    width = 2 * n
    prev = 1
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if aug[r][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        pivot = aug[k][k]
        for i in range(k + 1, n):
            row_i, factor = aug[i], aug[i][k]
            row_k = aug[k]
            for j in range(k + 1, width):
                row_i[j] = _exact_div(pivot * row_i[j] - factor * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    cols = []
    u = Mat([row[:n] for row in aug])
    for j in range(n, width):
        cols.append(solve_upper_triangular(u, [row[j] for row in aug]))
    return Mat.from_cols(cols)


def kernel_and_rank(a: Mat) -> tuple[int, list[tuple[Fraction, ...]]]:
    """Rank and an exact basis of the right kernel, via reduced row echelon form.

    Kernel vectors are produced one per free column, in ascending column
    order, with a 1 in the free coordinate (deterministic).
    """
    m = [list(row) for row in a.rows]
    nrows, ncols = a.nrows, a.ncols
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][c]
        m[r] = [x / pivot for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    rank = len(pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivot_cols):
            v[pc] = -m[row_idx][fc]
        basis.append(tuple(v))
    return rank, basis


def rank(a: Mat) -> int:
    return kernel_and_rank(a)[0]
