"""Exact linear algebra over the rationals.

Determinant and rank run fraction-free (Bareiss) elimination on an
integer rescaling of the matrix, so intermediate values stay integral
and nothing is ever rounded. Solving uses ordinary Gaussian elimination
on Fractions, which is exact as well.
"""

from fractions import Fraction
from math import lcm

Rational = Fraction


class NonSquareError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


class Matrix:
    """Dense row-major matrix of Fractions. Treat instances as immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(Fraction(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(f"need {rows}x{cols} = {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, row_seqs):
        row_seqs = [list(r) for r in row_seqs]
        rows = len(row_seqs)
        cols = len(row_seqs[0]) if row_seqs else 0
        if any(len(r) != cols for r in row_seqs):
            raise ValueError("ragged rows")
        return cls(rows, cols, [x for r in row_seqs for x in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    def at(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [self.at(i, j) for j in range(self.cols) for i in range(self.rows)])

    def matmul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatchError(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                out.append(sum((self.at(i, k) * other.at(k, j) for k in range(self.cols)),
                               Fraction(0)))
        return Matrix(self.rows, other.cols, out)

    def apply(self, vec):
        vec = [Fraction(v) for v in vec]
        if len(vec) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(vec)} for {self.rows}x{self.cols}")
        return tuple(sum((self.at(i, j) * vec[j] for j in range(self.cols)), Fraction(0))
                     for i in range(self.rows))

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"


def _integer_rows(m):
    """Clear denominators row by row; return (int rows, row scale factors)."""
    out, scales = [], []
    for i in range(m.rows):
        row = m.row(i)
        mult = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * mult) for x in row])
        scales.append(mult)
    return out, scales


def rank(m):
    """Rank over the rationals, by fraction-free elimination."""
    a, _ = _integer_rows(m)
    rows, cols = m.rows, m.cols
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
    return r


def det(m):
    """Exact determinant of a square matrix."""
    if m.rows != m.cols:
        raise NonSquareError(f"{m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a, scales = _integer_rows(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    value = Fraction(sign * a[n - 1][n - 1])
    for s in scales:
        value /= s
    return value


def solve(m, b):
    """Solve m x = b for square m; None when m is singular."""
    if m.rows != m.cols:
        raise NonSquareError(f"{m.rows}x{m.cols}")
    b = [Fraction(x) for x in b]
    if len(b) != m.rows:
        raise DimensionMismatchError(f"rhs of length {len(b)} for {m.rows}x{m.cols}")
    n = m.rows
    a = [list(m.row(i)) + [b[i]] for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot is None:
            return None
        a[c], a[pivot] = a[pivot], a[c]
        for i in range(c + 1, n):
            if a[i][c] == 0:
                continue
            factor = a[i][c] / a[c][c]
            for j in range(c, n + 1):
                a[i][j] -= factor * a[c][j]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = a[i][n] - sum((a[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        x[i] = acc / a[i][i]
    return tuple(x)
