"""Sylvester and subresultant matrices, tau-selections, subresultant polynomials.

Matrices are laid out column-wise: every column of the Sylvester matrix
is a down-shifted copy of the descending coefficient vector of ``f`` (the
first ``n`` columns) or ``g`` (the next ``m`` columns).  Degrees are read
from ``nominal_degree`` so a determinant polynomial keeps its length even
if its leading coefficient is zero.
"""

from .errors import DegenerateDegrees, IndexOutOfRange
from .matrix import Mat, det
from .poly import Poly


def _degrees(f, g):
    m, n = f.nominal_degree, g.nominal_degree
    if not (m >= n > 0):
        raise DegenerateDegrees(f"need deg f >= deg g > 0, got m={m}, n={n}")
    return m, n


def _banded(cols_spec, rows):
    """Build a matrix from ``(coeffs_descending, count)`` column groups."""
    columns = []
    for coeffs, count in cols_spec:
        for s in range(count):
            col = [0] * rows
            for t, c in enumerate(coeffs):
                if s + t < rows:
                    col[s + t] = c
            columns.append(col)
    ncols = len(columns)
    return Mat(rows, ncols, [columns[c][r] for r in range(rows) for c in range(ncols)])


def sylvester_matrix(f, g):
    m, n = _degrees(f, g)
    return _banded([(f.descending(m + 1), n), (g.descending(n + 1), m)], m + n)


def check_index(m, n, j):
    """Valid ``j`` is ``0 <= j < n``; ``j == n`` is allowed when ``m > n``.

    The ``j == n`` matrix keeps no columns of ``f`` and ``m - n`` of ``g``;
    its subresultant is ``lc(g)**(m-n-1) * g``.  The recursion needs it
    when one stage's gcd is the second polynomial itself.
    """
    if not (0 <= j < n or (j == n and m > n)):
        raise IndexOutOfRange(f"j={j} outside the range for m={m}, n={n}")


def subres_matrix(f, g, j):
    """The ``(m+n-j) x (m+n-2j)`` matrix with ``n-j`` f-columns and ``m-j`` g-columns."""
    m, n = _degrees(f, g)
    check_index(m, n, j)
    return _banded([(f.descending(m + 1), n - j), (g.descending(n + 1), m - j)],
                   m + n - j)


def tau_rows(rows, cols, j, tau):
    """0-based row indices of the tau-selection of a ``rows x cols`` band matrix.

    The top ``cols - 1`` rows plus the row that carries the ``x**tau``
    coefficient, which is row ``cols + j - tau`` counting from one.
    """
    if not 0 <= tau <= j:
        raise IndexOutOfRange(f"tau={tau} outside 0..{j}")
    if rows != cols + j:
        raise IndexOutOfRange(f"{rows}x{cols} matrix cannot carry degree {j}")
    return list(range(cols - 1)) + [cols - 1 + j - tau]


def tau_select(mat, j, tau):
    return mat.select(tau_rows(mat.rows, mat.cols, j, tau))


def determinant_poly(mat, j):
    """Polynomial of nominal degree ``j`` whose ``x**tau`` coefficient is
    the determinant of the tau-selection of ``mat``."""
    return Poly([det(tau_select(mat, j, tau)) for tau in range(j + 1)], nominal_degree=j)


def subres_matrix_tau(f, g, j, tau):
    return tau_select(subres_matrix(f, g, j), j, tau)


def subresultant_poly(f, g, j):
    return determinant_poly(subres_matrix(f, g, j), j)


def resultant(f, g):
    return det(sylvester_matrix(f, g))
