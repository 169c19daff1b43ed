"""Exact dense matrices over QQ and F_p, and their ranks.

Rational matrices are cleared of denominators row by row and reduced with
Bareiss' fraction-free elimination, so every intermediate entry is an
integer minor of the input.  Prime-field matrices use ordinary Gaussian
elimination on residues.  Pivots are the first nonzero entry in column
order, which keeps runs reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch
from .fields import FieldSpec, Rationals, Scalar


class ExactMatrix:
    """Immutable dense matrix with entries in ``field``."""

    __slots__ = ("field", "rows", "cols", "_entries")

    def __init__(self, field: FieldSpec, entries: Iterable[Sequence[Scalar]], cols: int | None = None):
        data = tuple(tuple(field.normalize(x) for x in row) for row in entries)
        if cols is None:
            if not data:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise DimensionMismatch("ragged rows")
        self.field = field
        self.rows = len(data)
        self.cols = cols
        self._entries = data

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence[Scalar]], rows: int) -> "ExactMatrix":
        if any(len(c) != rows for c in columns):
            raise DimensionMismatch(f"every column must have {rows} entries")
        return cls(field, [[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "ExactMatrix":
        return cls(field, [[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "ExactMatrix":
        return cls(field, [[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self._entries[i][j]

    def row_list(self) -> list[list[Scalar]]:
        return [list(r) for r in self._entries]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, zip(*self._entries), cols=self.rows) if self.rows else \
            ExactMatrix(self.field, [[] for _ in range(self.cols)], cols=0)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch(f"row counts differ: {self.rows} vs {other.rows}")
        if self.field != other.field:
            raise DimensionMismatch("matrices over different fields")
        return ExactMatrix(self.field, [a + b for a, b in zip(self._entries, other._entries)],
                           cols=self.cols + other.cols)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.field, self.rows, self.cols, self._entries) == \
            (other.field, other.rows, other.cols, other._entries)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self._entries))

    def __repr__(self):
        return f"ExactMatrix({self.field}, {self.rows}x{self.cols})"


def _integer_rows(rows: Iterable[Sequence[Scalar]]) -> list[list[int]]:
    out = []
    for row in rows:
        den = lcm(*(x.denominator for x in row if isinstance(x, Fraction))) if row else 1
        out.append([int(x * den) for x in row])
    return out


def _bareiss(M: list[list[int]], ncols: int) -> int:
    """Fraction-free elimination in place; returns the rank.  Afterwards the
    first ``rank`` rows are an echelon basis of the row space."""
    n = len(M)
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == n:
            break
        piv = next((i for i in range(rank, n) if M[i][c]), None)
        if piv is None:
            continue
        if piv != rank:
            M[rank], M[piv] = M[piv], M[rank]
        top = M[rank]
        p = top[c]
        for i in range(rank + 1, n):
            row = M[i]
            f = row[c]
            # rows with f == 0 are rescaled too, so every entry stays a minor
            # and the division by the previous pivot is exact
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - f * top[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
    return rank


def _eliminate_mod_p(M: list[list[int]], ncols: int, p: int) -> int:
    n = len(M)
    rank = 0
    for c in range(ncols):
        if rank == n:
            break
        piv = next((i for i in range(rank, n) if M[i][c]), None)
        if piv is None:
            continue
        if piv != rank:
            M[rank], M[piv] = M[piv], M[rank]
        top = M[rank]
        inv = pow(top[c], -1, p)
        for j in range(c, ncols):
            top[j] = top[j] * inv % p
        for i in range(rank + 1, n):
            row = M[i]
            f = row[c]
            if f:
                for j in range(c, ncols):
                    row[j] = (row[j] - f * top[j]) % p
        rank += 1
    return rank


def rank_bareiss(rows: Iterable[Sequence[Scalar]], ncols: int) -> int:
    """Rank over QQ of a list of rational rows."""
    M = [r for r in _integer_rows(rows) if any(r)]
    return _bareiss(M, ncols)


def rank_mod_p(rows: Iterable[Sequence[int]], ncols: int, p: int) -> int:
    """Rank over F_p of integer rows."""
    M = [r for r in ([x % p for x in row] for row in rows) if any(r)]
    return _eliminate_mod_p(M, ncols, p)


def row_basis(field: FieldSpec, rows: Iterable[Sequence[Scalar]], ncols: int) -> list[list[int]]:
    """An echelon basis of the span of ``rows``.  Over QQ the basis rows are
    primitive integer vectors."""
    if field.char:
        M = [r for r in ([int(x) % field.char for x in row] for row in rows) if any(r)]
        k = _eliminate_mod_p(M, ncols, field.char)
        return M[:k]
    M = [r for r in _integer_rows(rows) if any(r)]
    k = _bareiss(M, ncols)
    basis = []
    for row in M[:k]:
        g = gcd(*row)
        basis.append([x // g for x in row])
    return basis


def rank_of_rows(field: FieldSpec, rows: Iterable[Sequence[Scalar]], ncols: int) -> int:
    """Rank of the span of ``rows`` (vectors of length ``ncols``) over ``field``."""
    if field.char:
        return rank_mod_p(rows, ncols, field.char)
    return rank_bareiss(rows, ncols)


def rank(M: ExactMatrix) -> int:
    # row rank equals column rank; eliminate along the shorter side
    if M.rows <= M.cols:
        return rank_of_rows(M.field, M._entries, M.cols)
    return rank_of_rows(M.field, zip(*M._entries), M.rows)


def rank_of_stacked(A: ExactMatrix, B: ExactMatrix) -> int:
    """Rank of the column concatenation ``[A | B]``."""
    if A.rows != B.rows:
        raise DimensionMismatch(f"row counts differ: {A.rows} vs {B.rows}")
    if A.field != B.field:
        raise DimensionMismatch("matrices over different fields")
    columns = list(zip(*A._entries)) + list(zip(*B._entries))
    return rank_of_rows(A.field, columns, A.rows)


def matrix(entries: Sequence[Sequence[Scalar]], field: FieldSpec = Rationals) -> ExactMatrix:
    """Shorthand constructor, mostly for tests and interactive use."""
    return ExactMatrix(field, entries)
