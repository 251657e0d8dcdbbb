"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` values (always in lowest terms with a
positive denominator).  Elimination runs fraction-free on integer rows
(Bareiss) and is reduced to row echelon form afterwards, so intermediate
numbers stay bounded by minors of the input.

All hom/ext dimensions in this package are computed over Q.  For quivers of
Dynkin type every indecomposable is defined over the prime field, so these
dimensions agree with the ones over an algebraically closed field.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

__all__ = [
    "Matrix",
    "rank",
    "kernel_basis",
    "solve",
    "column_space",
    "image_complement_change_of_basis",
    "rref",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Matrix:
    """Immutable rows x cols matrix with row-major Fraction entries.

    Matrices with zero rows or zero columns are legal and act as zero maps.
    """

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], cols: int | None = None) -> Matrix:
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        entries: list[Fraction] = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            entries.extend(Fraction(x) for x in r)
        return cls(len(rows), cols, tuple(entries))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[object]], rows: int) -> Matrix:
        return cls.from_rows([list(c) for c in columns], cols=rows).T if columns else cls.zeros(rows, 0)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    # -- algebra ------------------------------------------------------------

    @property
    def T(self) -> Matrix:
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out: list[Fraction] = []
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            nz = [(k, x) for k, x in enumerate(arow) if x]
            for j in range(p):
                s = _ZERO
                for k, x in nz:
                    y = b[k * p + j]
                    if y:
                        s += x * y
                out.append(s)
        return Matrix(n, p, tuple(out))

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix(self.rows, self.cols, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix(self.rows, self.cols, tuple(x - y for x, y in zip(self.entries, other.entries)))

    def scale(self, c: object) -> Matrix:
        c = Fraction(c)
        return Matrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def power(self, k: int) -> Matrix:
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def select_columns(self, idx: Iterable[int]) -> Matrix:
        idx = list(idx)
        return Matrix(
            self.rows,
            len(idx),
            tuple(self.entries[i * self.cols + j] for i in range(self.rows) for j in idx),
        )

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def hstack(blocks: Sequence[Matrix], rows: int | None = None) -> Matrix:
    if not blocks:
        if rows is None:
            raise ValueError("rows must be given to stack nothing")
        return Matrix.zeros(rows, 0)
    r = blocks[0].rows
    if any(b.rows != r for b in blocks):
        raise ValueError("hstack row mismatch")
    entries: list[Fraction] = []
    for i in range(r):
        for b in blocks:
            entries.extend(b.row(i))
    return Matrix(r, sum(b.cols for b in blocks), tuple(entries))


def vstack(blocks: Sequence[Matrix], cols: int | None = None) -> Matrix:
    if not blocks:
        if cols is None:
            raise ValueError("cols must be given to stack nothing")
        return Matrix.zeros(0, cols)
    c = blocks[0].cols
    if any(b.cols != c for b in blocks):
        raise ValueError("vstack column mismatch")
    return Matrix(sum(b.rows for b in blocks), c, tuple(x for b in blocks for x in b.entries))


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[_ZERO] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return Matrix(rows, cols, tuple(x for r in out for x in r))


# -- elimination ------------------------------------------------------------


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Scale every row by the lcm of its denominators (row space unchanged)."""
    rows = []
    for i in range(m.rows):
        r = m.row(i)
        den = lcm(*(x.denominator for x in r)) if r else 1
        rows.append([int(x * den) for x in r])
    return rows


def _bareiss(rows: list[list[int]], ncols: int) -> list[int]:
    """Fraction-free forward elimination in place; returns the pivot columns.

    Pivot choice: first row (from the current one down) with a nonzero entry
    in the leftmost remaining column.
    """
    nrows = len(rows)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, ncols):
                q, rem = divmod(piv * ri[j] - f * prow[j], prev)
                if rem:
                    raise ArithmeticError("Bareiss division was not exact")
                ri[j] = q
            ri[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form: (nonzero rows, pivot columns)."""
    rows = _integer_rows(m)
    pivots = _bareiss(rows, m.cols)
    red = [[Fraction(x) for x in rows[k]] for k in range(len(pivots))]
    for k, c in enumerate(pivots):
        inv = 1 / red[k][c]
        red[k] = [x * inv for x in red[k]]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        pk = red[k]
        for i in range(k):
            f = red[i][c]
            if f:
                red[i] = [x - f * y for x, y in zip(red[i], pk)]
    return red, pivots


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_bareiss(_integer_rows(m), m.cols))


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form a basis of {v : m v = 0}; one column per free variable."""
    n = m.cols
    if m.rows == 0:
        return Matrix.identity(n)
    red, pivots = rref(m)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    cols: list[list[Fraction]] = []
    for f in free:
        v = [_ZERO] * n
        v[f] = _ONE
        for k, p in enumerate(pivots):
            v[p] = -red[k][f]
        cols.append(v)
    return Matrix.from_columns(cols, n) if cols else Matrix.zeros(n, 0)


def solve(m: Matrix, b: Matrix) -> Matrix | None:
    """Some x with m @ x == b, or None when the system is inconsistent."""
    if m.rows != b.rows:
        raise ValueError(f"solve: {m.rows} equations but rhs has {b.rows} rows")
    n = m.cols
    if m.rows == 0:
        return Matrix.zeros(n, b.cols)
    red, pivots = rref(hstack([m, b]))
    if pivots and pivots[-1] >= n:
        return None
    x = [[_ZERO] * b.cols for _ in range(n)]
    for k, p in enumerate(pivots):
        x[p] = red[k][n:]
    return Matrix(n, b.cols, tuple(v for r in x for v in r))


def column_space(m: Matrix) -> Matrix:
    """Independent columns of m (the pivot columns) spanning its image."""
    if m.cols == 0 or m.rows == 0:
        return Matrix.zeros(m.rows, 0)
    _, pivots = rref(m)
    return m.select_columns(pivots)


def image_complement_change_of_basis(sub: Matrix, ambient_dim: int) -> tuple[Matrix, Matrix]:
    """Coordinates on ambient / span(sub).

    Returns ``(projection, inclusion)`` where ``projection`` is q x d with
    ``projection @ sub == 0`` and ``inclusion`` is d x q with
    ``projection @ inclusion == I_q``; q = d - rank(sub).  The complement is
    spanned by the standard basis vectors at the non-pivot coordinates of
    span(sub).
    """
    if sub.rows != ambient_dim:
        raise ValueError(f"sub has {sub.rows} rows, ambient dimension is {ambient_dim}")
    d = ambient_dim
    if sub.cols == 0 or d == 0:
        return Matrix.identity(d), Matrix.identity(d)
    red, pivots = rref(sub.T)
    pivset = set(pivots)
    comp = [c for c in range(d) if c not in pivset]
    proj_rows = []
    for c in comp:
        r = [_ZERO] * d
        r[c] = _ONE
        for k, p in enumerate(pivots):
            r[p] -= red[k][c]
        proj_rows.append(r)
    projection = Matrix.from_rows(proj_rows, cols=d) if proj_rows else Matrix.zeros(0, d)
    inclusion = Matrix.from_columns(
        [[_ONE if i == c else _ZERO for i in range(d)] for c in comp], d
    ) if comp else Matrix.zeros(d, 0)
    return projection, inclusion
