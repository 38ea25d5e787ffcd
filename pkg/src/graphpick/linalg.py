"""Exact linear algebra over rational-function entries.

Determinants are computed fraction-free: denominators are cleared one
column at a time, a Bareiss elimination runs over the resulting integer
polynomials, and the accumulated column scalars are divided back at the
end.  Inverse entries come from the cofactor formula, Schur complements
from block elimination over the rational-function field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .ratfun import Polynomial, RatFun, poly_lcm

_P_ONE = Polynomial.one()
_P_ZERO = Polynomial.zero()
_RF_ZERO = RatFun(0)
_RF_ONE = RatFun(1)


@dataclass(frozen=True)
class SymMatrix:
    """Square matrix of rational functions; indices are 1-based."""

    rows: tuple[tuple[RatFun, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix rows must all have the same length")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> SymMatrix:
        out = []
        for row in rows:
            out.append(
                tuple(e if isinstance(e, RatFun) else RatFun(e) for e in row)
            )
        return cls(tuple(out))

    @classmethod
    def identity(cls, n: int) -> SymMatrix:
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> RatFun:
        return self.rows[i - 1][j - 1]

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)


def _bareiss(grid: list[list[Polynomial]]) -> Polynomial:
    """Determinant of a polynomial matrix by fraction-free elimination."""
    n = len(grid)
    if n == 0:
        return _P_ONE
    sign = 1
    prev = _P_ONE
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if not grid[i][k].is_zero), None)
        if pivot_row is None:
            return _P_ZERO
        if pivot_row != k:
            grid[k], grid[pivot_row] = grid[pivot_row], grid[k]
            sign = -sign
        pivot = grid[k][k]
        for i in range(k + 1, n):
            row_i = grid[i]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - head * grid[k][j]).exact_div(prev)
            row_i[k] = _P_ZERO
        prev = pivot
    det = grid[n - 1][n - 1]
    return -det if sign < 0 else det


def determinant(m: SymMatrix) -> RatFun:
    """Exact determinant; the zero rational function for singular input."""
    n = m.n
    if n == 0:
        return _RF_ONE
    grid: list[list[Polynomial]] = [[None] * n for _ in range(n)]
    scale = _P_ONE
    for j in range(n):
        col_lcm = _P_ONE
        for i in range(n):
            den = m.rows[i][j].den
            if den != _P_ONE:
                col_lcm = poly_lcm(col_lcm, den)
        for i in range(n):
            e = m.rows[i][j]
            grid[i][j] = e.num * col_lcm.exact_div(e.den)
        scale = scale * col_lcm
    return RatFun(_bareiss(grid), scale)


def _minor(m: SymMatrix, drop_row: int, drop_col: int) -> SymMatrix:
    rows = []
    for i, row in enumerate(m.rows):
        if i == drop_row:
            continue
        rows.append(tuple(e for j, e in enumerate(row) if j != drop_col))
    return SymMatrix(tuple(rows))


def inverse_entry(m: SymMatrix, i: int, j: int | None = None) -> RatFun:
    """Entry (i, j) of the matrix inverse via the cofactor formula.

    Defaults to the diagonal entry (i, i).  Indices are 1-based.
    """
    if j is None:
        j = i
    n = m.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"index ({i}, {j}) out of range for a {n}x{n} matrix")
    det = determinant(m)
    if det.is_zero:
        raise ValueError("singular colored matrix")
    cof = determinant(_minor(m, j - 1, i - 1))
    if (i + j) % 2:
        cof = -cof
    return cof / det


def _invert_field(rows: list[list[RatFun]]) -> list[list[RatFun]]:
    """Gauss-Jordan inverse over the rational-function field."""
    n = len(rows)
    aug = [
        list(rows[i]) + [_RF_ONE if i == j else _RF_ZERO for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot_row = next(
            (r for r in range(col, n) if not aug[r][col].is_zero), None
        )
        if pivot_row is None:
            raise ValueError("singular block in Schur reduction")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv = aug[col][col].reciprocal()
        aug[col] = [e * inv for e in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def schur_reduce(m: SymMatrix, keep: Sequence[int]) -> SymMatrix:
    """Schur complement onto the 1-based index set ``keep``.

    The result is ordered by ascending kept index and has the same inverse
    entries as the original matrix on the kept block.
    """
    n = m.n
    ks = sorted(set(keep))
    if not ks:
        raise ValueError("keep set must not be empty")
    if ks[0] < 1 or ks[-1] > n:
        raise ValueError("keep set out of range")
    rest = [i for i in range(1, n + 1) if i not in set(ks)]
    if not rest:
        return m
    a11 = [[m.entry(i, j) for j in ks] for i in ks]
    a12 = [[m.entry(i, j) for j in rest] for i in ks]
    a21 = [[m.entry(i, j) for j in ks] for i in rest]
    a22 = [[m.entry(i, j) for j in rest] for i in rest]
    inv22 = _invert_field(a22)
    p = len(ks)
    q = len(rest)
    out = []
    for r in range(p):
        row = []
        for c in range(p):
            acc = a11[r][c]
            for s in range(q):
                if a12[r][s].is_zero:
                    continue
                inner = _RF_ZERO
                for t in range(q):
                    inner = inner + inv22[s][t] * a21[t][c]
                acc = acc - a12[r][s] * inner
            row.append(acc)
        out.append(tuple(row))
    return SymMatrix(tuple(out))
