"""Exact dense matrices over a ``FieldSpec``.

Matrices with zero rows or zero columns are ordinary values here: the
canonical families start at n = 0, where blocks such as ``i_up(0)`` are
the 1x0 matrix.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import NamedTuple, Optional, Union

from .exactfield import (
    RATIONALS,
    FieldSpec,
    Poly,
    Scalar,
    from_sympy,
    is_irreducible,
    poly_power,
    to_sympy,
)
from .exceptions import (
    DimensionMismatchError,
    FieldMismatchError,
    NotSquareError,
    ReducibleModulusError,
)
from .typing import Raw


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[Raw, ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError(
                f'Wrong shape {self.rows}x{self.cols}.'
            )
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f'A {self.rows}x{self.cols} matrix needs '
                f'{self.rows * self.cols} entries, got {len(self.entries)}.'
            )

    @classmethod
    def from_rows(
        cls,
        field: FieldSpec,
        rows: Sequence[Sequence[Union[Raw, Scalar, str]]],
        cols: Optional[int] = None,
    ) -> Matrix:
        """Builds a matrix from nested rows, reducing every entry.

        ``cols`` is only needed for matrices without rows.
        """
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries: list[Raw] = []
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatchError(
                    f'Ragged row of length {len(row)}, expected {cols}.'
                )
            entries.extend(field.reduce(x) for x in row)
        return cls(field, len(rows), cols, tuple(entries))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> Raw:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Raw, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Raw, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Raw]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def scalar(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self[i, j])

    def is_zero(self) -> bool:
        return not any(self.entries)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> Matrix:
        """The submatrix of rows ``r0:r1`` and columns ``c0:c1``."""
        rows = [self.row(i)[c0:c1] for i in range(r0, r1)]
        return Matrix.from_rows(self.field, rows, max(c1 - c0, 0))

    @property
    def T(self) -> Matrix:
        return transpose(self)

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    def __add__(self, other: Matrix) -> Matrix:
        _check_same(self, other)
        f = self.field
        return Matrix(
            f,
            self.rows,
            self.cols,
            tuple(f.add(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: Matrix) -> Matrix:
        _check_same(self, other)
        f = self.field
        return Matrix(
            f,
            self.rows,
            self.cols,
            tuple(f.sub(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> Matrix:
        f = self.field
        return Matrix(
            f, self.rows, self.cols, tuple(f.neg(a) for a in self.entries)
        )


class RREF(NamedTuple):
    reduced: Matrix
    rank: int
    pivots: list[int]


def _check_field(a: Matrix, b: Matrix):
    if a.field != b.field:
        raise FieldMismatchError(f'Matrices over {a.field} and {b.field}.')


def _check_same(a: Matrix, b: Matrix):
    _check_field(a, b)
    if a.shape != b.shape:
        raise DimensionMismatchError(
            f'Shapes {a.rows}x{a.cols} and {b.rows}x{b.cols} differ.'
        )


def identity(n: int, field: FieldSpec = RATIONALS) -> Matrix:
    one, zero = field.one, field.zero
    return Matrix(
        field,
        n,
        n,
        tuple(one if i == j else zero for i in range(n) for j in range(n)),
    )


def zero(rows: int, cols: int, field: FieldSpec = RATIONALS) -> Matrix:
    return Matrix(field, rows, cols, (field.zero,) * (rows * cols))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _check_field(a, b)
    if a.cols != b.rows:
        raise DimensionMismatchError(
            f'Cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}.'
        )
    f = a.field
    b_cols = [b.column(j) for j in range(b.cols)]
    entries: list[Raw] = []
    for i in range(a.rows):
        row = a.row(i)
        for col in b_cols:
            s = sum(x * y for x, y in zip(row, col) if x and y)
            entries.append(s % f.p if f.p else Fraction(s))
    return Matrix(f, a.rows, b.cols, tuple(entries))


def scalar_mul(c: Union[Raw, Scalar], m: Matrix) -> Matrix:
    f = m.field
    value = f.reduce(c)
    return Matrix(
        f, m.rows, m.cols, tuple(f.mul(value, x) for x in m.entries)
    )


def transpose(m: Matrix) -> Matrix:
    entries = tuple(x for j in range(m.cols) for x in m.column(j))
    return Matrix(m.field, m.cols, m.rows, entries)


def hstack(*ms: Matrix) -> Matrix:
    if not ms:
        raise DimensionMismatchError('hstack needs at least one matrix.')
    first = ms[0]
    for m in ms[1:]:
        _check_field(first, m)
        if m.rows != first.rows:
            raise DimensionMismatchError(
                f'hstack of {first.rows}-row and {m.rows}-row matrices.'
            )
    rows = [sum((m.row(i) for m in ms), ()) for i in range(first.rows)]
    return Matrix(
        first.field,
        first.rows,
        sum(m.cols for m in ms),
        tuple(x for row in rows for x in row),
    )


def vstack(*ms: Matrix) -> Matrix:
    if not ms:
        raise DimensionMismatchError('vstack needs at least one matrix.')
    first = ms[0]
    for m in ms[1:]:
        _check_field(first, m)
        if m.cols != first.cols:
            raise DimensionMismatchError(
                f'vstack of {first.cols}-column and {m.cols}-column matrices.'
            )
    return Matrix(
        first.field,
        sum(m.rows for m in ms),
        first.cols,
        sum((m.entries for m in ms), ()),
    )


def direct_sum(*ms: Matrix) -> Matrix:
    """The block diagonal matrix of ``ms``."""
    if not ms:
        raise DimensionMismatchError('direct_sum needs at least one matrix.')
    field = ms[0].field
    total_cols = sum(m.cols for m in ms)
    rows: list[Raw] = []
    offset = 0
    for m in ms:
        _check_field(ms[0], m)
        left = (field.zero,) * offset
        right = (field.zero,) * (total_cols - offset - m.cols)
        for i in range(m.rows):
            rows.extend(left + m.row(i) + right)
        offset += m.cols
    return Matrix(field, sum(m.rows for m in ms), total_cols, tuple(rows))


def block_matrix(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    return vstack(*(hstack(*row) for row in grid))


def _echelon(
    rows: list[list[Raw]], ncols: int, field: FieldSpec
) -> list[int]:
    """Reduces ``rows`` in place to reduced row echelon form."""
    p = field.p
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r]
        inv = field.inv(lead[c])
        if inv != 1:
            if p:
                lead = [(x * inv) % p for x in lead]
            else:
                lead = [x * inv for x in lead]
            rows[r] = lead
        for i in range(nrows):
            if i == r:
                continue
            factor = rows[i][c]
            if not factor:
                continue
            if p:
                rows[i] = [(x - factor * y) % p for x, y in zip(rows[i], lead)]
            else:
                rows[i] = [x - factor * y for x, y in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> RREF:
    rows = m.to_rows()
    pivots = _echelon(rows, m.cols, m.field)
    reduced = Matrix.from_rows(m.field, rows, m.cols)
    return RREF(reduced, len(pivots), pivots)


def rank(m: Matrix) -> int:
    return rref(m).rank


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form the canonical basis of the null space of ``m``."""
    f = m.field
    reduced, _, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    columns = []
    for c in free:
        vector = [f.zero] * m.cols
        vector[c] = f.one
        for i, pc in enumerate(pivots):
            vector[pc] = f.neg(reduced[i, c])
        columns.append(vector)
    return _from_columns(f, m.cols, columns)


def column_basis(m: Matrix) -> Matrix:
    """The pivot columns of ``m``, a basis of its column space."""
    pivots = rref(m).pivots
    return _from_columns(m.field, m.rows, [m.column(j) for j in pivots])


def _from_columns(
    field: FieldSpec, nrows: int, columns: Sequence[Sequence[Raw]]
) -> Matrix:
    entries = tuple(col[i] for i in range(nrows) for col in columns)
    return Matrix(field, nrows, len(columns), entries)


def from_columns(
    field: FieldSpec, nrows: int, columns: Iterable[Sequence[Raw]]
) -> Matrix:
    return _from_columns(field, nrows, list(columns))


def solve(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """One solution ``X`` of ``a @ X = b``, or ``None``.

    Free variables are set to zero, so the answer is the canonical
    minimal-pivot solution.
    """
    _check_field(a, b)
    if a.rows != b.rows:
        raise DimensionMismatchError(
            f'solve needs equal row counts, got {a.rows} and {b.rows}.'
        )
    f = a.field
    augmented = hstack(a, b)
    reduced, _, pivots = rref(augmented)
    if any(c >= a.cols for c in pivots):
        return None
    solution = [[f.zero] * b.cols for _ in range(a.cols)]
    for i, c in enumerate(pivots):
        for j in range(b.cols):
            solution[c][j] = reduced[i, a.cols + j]
    return Matrix.from_rows(f, solution, b.cols)


def inverse(m: Matrix) -> Optional[Matrix]:
    if not m.is_square:
        raise NotSquareError(f'Cannot invert a {m.rows}x{m.cols} matrix.')
    n = m.rows
    reduced, r, _ = rref(hstack(m, identity(n, m.field)))
    if r < n or any(reduced[i, i] != 1 for i in range(n)):
        return None
    return reduced.block(0, n, n, 2 * n)


def is_invertible(m: Matrix) -> bool:
    return m.is_square and rank(m) == m.rows


def is_injective(m: Matrix) -> bool:
    return rank(m) == m.cols


def is_surjective(m: Matrix) -> bool:
    return rank(m) == m.rows


def i_up(n: int, field: FieldSpec = RATIONALS) -> Matrix:
    """Identity with a zero row adjoined above, (n+1) x n."""
    return vstack(zero(1, n, field), identity(n, field))


def i_down(n: int, field: FieldSpec = RATIONALS) -> Matrix:
    """Identity with a zero row adjoined below, (n+1) x n."""
    return vstack(identity(n, field), zero(1, n, field))


def i_right(n: int, field: FieldSpec = RATIONALS) -> Matrix:
    """Identity with a zero column adjoined on the right, n x (n+1)."""
    return hstack(identity(n, field), zero(n, 1, field))


def i_left(n: int, field: FieldSpec = RATIONALS) -> Matrix:
    """Identity with a zero column adjoined on the left, n x (n+1)."""
    return hstack(zero(n, 1, field), identity(n, field))


def companion(p: Poly, s: int = 1) -> Matrix:
    """The Frobenius cell of ``p**s``.

    Subdiagonal ones, last column holding the negated coefficients.
    """
    if not p.is_monic or not is_irreducible(p):
        raise ReducibleModulusError(
            f'{p} is not a monic irreducible polynomial over {p.field}.'
        )
    f = p.field
    q = poly_power(p, s)
    n = q.degree
    rows = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        if i + 1 < n:
            rows[i + 1][i] = f.one
        rows[i][n - 1] = f.neg(q.coeffs[i])
    return Matrix.from_rows(f, rows, n)


def jordan_plus(n: int, field: FieldSpec = RATIONALS) -> Matrix:
    """Nilpotent Jordan block of order ``n``, ones above the diagonal."""
    if n < 1:
        raise ValueError(f'Wrong parameter n={n}, expected n >= 1.')
    rows = [
        [field.one if j == i + 1 else field.zero for j in range(n)]
        for i in range(n)
    ]
    return Matrix.from_rows(field, rows, n)


def power(m: Matrix, k: int) -> Matrix:
    if not m.is_square:
        raise NotSquareError(f'Cannot raise a {m.rows}x{m.cols} matrix.')
    result = identity(m.rows, m.field)
    base = m
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


def poly_eval(p: Poly, m: Matrix) -> Matrix:
    """Evaluates ``p`` at the square matrix ``m`` by Horner's rule."""
    if not m.is_square:
        raise NotSquareError(
            f'Cannot evaluate at a {m.rows}x{m.cols} matrix.'
        )
    if p.field != m.field:
        raise FieldMismatchError(
            f'Polynomial over {p.field}, matrix over {m.field}.'
        )
    n = m.rows
    result = zero(n, n, m.field)
    for c in reversed(p.coeffs):
        result = result @ m + scalar_mul(c, identity(n, m.field))
    return result


def minimal_polynomial(m: Matrix) -> Poly:
    """The monic polynomial of least degree annihilating ``m``."""
    if not m.is_square:
        raise NotSquareError(
            f'{m.rows}x{m.cols} matrix has no minimal polynomial.'
        )
    f = m.field
    n = m.rows
    if n == 0:
        return Poly(f, (f.one,))
    powers = [identity(n, f)]
    while True:
        krylov = from_columns(f, n * n, [pw.entries for pw in powers])
        target = powers[-1] @ m
        x = solve(krylov, Matrix(f, n * n, 1, target.entries))
        if x is not None:
            coeffs = tuple(f.neg(c) for c in x.entries) + (f.one,)
            return Poly(f, coeffs)
        powers.append(target)


def lcm_all(polys: Iterable[Poly], field: FieldSpec) -> Poly:
    items = [to_sympy(p) for p in polys]
    if not items:
        return Poly(field, (1,))
    return from_sympy(reduce(lambda a, b: a.lcm(b), items).monic(), field)


def random_matrix(
    rows: int, cols: int, field: FieldSpec, rng: random.Random
) -> Matrix:
    return Matrix(
        field,
        rows,
        cols,
        tuple(field.random_element(rng) for _ in range(rows * cols)),
    )


def random_invertible(n: int, field: FieldSpec, rng: random.Random) -> Matrix:
    while True:
        m = random_matrix(n, n, field, rng)
        if is_invertible(m):
            return m
