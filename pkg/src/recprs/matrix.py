"""Exact dense matrices, fraction-free determinants and row-system solves."""

from fractions import Fraction
from math import lcm

from .errors import NotSquare, SingularPivot, SingularU, TooLarge

COFACTOR_LIMIT = 8


class Mat:
    """Immutable row-major matrix of :class:`~fractions.Fraction` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(e if isinstance(e, Fraction) else Fraction(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(f"bad shape {rows}x{cols} for {len(entries)} entries")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def select(self, row_idx=None, col_idx=None):
        """Sub-matrix on the given (0-based) row and column index lists."""
        if row_idx is None:
            row_idx = range(self.rows)
        if col_idx is None:
            col_idx = range(self.cols)
        row_idx, col_idx = list(row_idx), list(col_idx)
        return Mat(len(row_idx), len(col_idx),
                   [self[i, j] for i in row_idx for j in col_idx])

    def transpose(self):
        return Mat(self.cols, self.rows,
                   [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def is_integral(self):
        return all(e.denominator == 1 for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {self.to_rows()!r})"


def vec_mat(x, m):
    """Row vector times matrix."""
    return [sum((x[i] * m[i, j] for i in range(m.rows)), Fraction(0))
            for j in range(m.cols)]


def _bareiss_int(rows):
    """Fraction-free elimination on a square list of integer rows (mutated)."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            a = ri[k]
            for j in range(k + 1, n):
                num = pivot * ri[j] - a * rk[j]
                q, r = divmod(num, prev)
                assert r == 0, "inexact Bareiss step"
                ri[j] = q
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def det(m):
    """Exact determinant by Bareiss fraction-free elimination.

    Rational rows are first scaled to integers by their common
    denominator, and the product of the scalings is divided out at the end.
    """
    if m.rows != m.cols:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = 1
    rows = []
    for i in range(n):
        r = m.row(i)
        d = 1
        for e in r:
            d = lcm(d, e.denominator)
        scale *= d
        rows.append([int(e * d) for e in r])
    return Fraction(_bareiss_int(rows), scale)


def det_cofactor(m):
    """Determinant by Laplace expansion along the first row; orders <= 8 only."""
    if m.rows != m.cols:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n > COFACTOR_LIMIT:
        raise TooLarge(f"cofactor expansion refused for order {n}")
    if n == 0:
        return Fraction(1)
    return _laplace(m.to_rows())


def _laplace(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _laplace(minor)
        total += -term if j % 2 else term
    return total


class RowSolver:
    """Factor ``u`` once and solve ``x @ u = c`` for many right-hand sides.

    Elimination runs on the transpose, since ``x @ u = c`` is
    ``u.T @ x.T = c.T``.
    """

    def __init__(self, u):
        if u.rows != u.cols:
            raise NotSquare(f"row system with a {u.rows}x{u.cols} matrix")
        n = u.rows
        a = u.transpose().to_rows()
        perm = list(range(n))
        for k in range(n):
            p = next((i for i in range(k, n) if a[i][k] != 0), None)
            if p is None:
                raise SingularU(f"matrix of order {n} is singular")
            if p != k:
                a[k], a[p] = a[p], a[k]
                perm[k], perm[p] = perm[p], perm[k]
            inv = 1 / a[k][k]
            for i in range(k + 1, n):
                f = a[i][k] * inv
                if f:
                    a[i][k] = f
                    for j in range(k + 1, n):
                        a[i][j] -= f * a[k][j]
                else:
                    a[i][k] = Fraction(0)
        self.n = n
        self._lu = a
        self._perm = perm
        self.u = u

    def solve(self, c):
        n = self.n
        if len(c) != n:
            raise ValueError(f"right-hand side of length {len(c)} for order {n}")
        lu = self._lu
        y = [Fraction(c[p]) for p in self._perm]
        for i in range(n):
            s = y[i]
            for j in range(i):
                s -= lu[i][j] * y[j]
            y[i] = s
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            s = y[i]
            for j in range(i + 1, n):
                s -= lu[i][j] * x[j]
            x[i] = s / lu[i][i]
        return x


def solve_row_system(u, c):
    """Solve ``x @ u = c`` exactly; raises :class:`SingularU` if ``u`` is singular."""
    return RowSolver(u).solve(c)


def sylvester_condense(a, k):
    """Matrix of bordered minors of order ``k+1`` on the leading ``k x k`` block.

    Entry ``(i, j)`` (for ``i, j > k``) is the determinant of the rows
    ``1..k, i`` and columns ``1..k, j`` of ``a``.  Sylvester's identity
    gives ``det(a) * m**(n-k-1) == det(result)`` where ``m`` is the leading
    ``k x k`` principal minor.
    """
    if a.rows != a.cols:
        raise NotSquare(f"condensation of a {a.rows}x{a.cols} matrix")
    n = a.rows
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} outside 1..{n - 1}")
    if det(a.select(range(k), range(k))) == 0:
        raise SingularPivot(f"leading principal minor of order {k} vanishes")
    head = list(range(k))
    out = []
    for i in range(k, n):
        out.append([det(a.select(head + [i], head + [j])) for j in range(k, n)])
    return Mat.from_rows(out, n - k)
