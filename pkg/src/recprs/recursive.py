"""Recursive subresultant matrices and polynomials.

Level ``k > 1`` is assembled from the level-``(k-1)`` matrix taken at
``j = j_{k-1}``.  That matrix has ``C + j_{k-1}`` rows and ``C`` columns.
Split it into

* ``upper``: the top ``C - 1`` rows (``N_U``),
* ``lower``: the bottom ``j_{k-1} + 1`` rows (``N_L``); with ``upper`` on
  top, lower row ``i`` gives the coefficient of ``x**(j_{k-1} - i)`` of
  the previous-level polynomial ``P``,
* ``lower_d``: ``lower`` with row ``i`` scaled by ``j_{k-1} - i`` and the
  last row dropped (``N_L'``), which gives the coefficients of ``P'``.

The new matrix mirrors the band structure of ``N^(j)(P, P')``, which has
``b = 2 j_{k-1} - 2j - 1`` columns.  Every column becomes a block column
of width ``C``.  The upper part is ``diag(upper, ..., upper)``.  Below it,
the block in column ``q`` is placed ``q`` rows further down.  The first
``j_{k-1} - j - 1`` block columns hold ``lower``; the remaining
``j_{k-1} - j`` hold ``lower_d``.  The result has ``b*C + j`` rows and
``b*C`` columns.

A block count of ``j_{k-1} - j_k - 1`` sometimes quoted for this
construction disagrees with the dimension formulas unless ``j_k`` is read
as ``j``.  The layout here uses ``b`` blocks.  It matches the dimension
formulas, and the equivalence with the nested subresultant is checked
exactly.
"""

from functools import lru_cache

from .classic import check_index, determinant_poly, subres_matrix, tau_select
from .errors import BadChain, IndexOutOfRange, LayoutUnresolved
from .matrix import Mat


def validate_chain(m, n, chain, k):
    """Check that ``chain`` reaches level ``k`` for polynomials of degree m, n."""
    chain = tuple(chain)
    if k < 1:
        raise BadChain(f"level k={k} must be >= 1")
    if not chain or chain[0] != m:
        raise BadChain(f"chain {chain} must start with m={m}")
    if len(chain) < k:
        raise BadChain(f"chain {chain} too short for level {k}")
    if any(a <= b for a, b in zip(chain, chain[1:])) or chain[-1] < 0:
        raise BadChain(f"chain {chain} is not strictly decreasing")
    if len(chain) > 1 and chain[1] > n:
        raise BadChain(f"j_1={chain[1]} exceeds n={n}")
    return chain


def check_level_index(m, n, chain, k, j):
    """Level 1 uses the classical range; level ``k > 1`` allows
    ``0 <= j <= j_{k-1} - 1``, the top value needed only for the recursion."""
    if k == 1:
        check_index(m, n, j)
    elif not 0 <= j <= chain[k - 1] - 1:
        raise IndexOutOfRange(f"j={j} outside 0..{chain[k - 1] - 1} at level {k}")


def rec_dims(m, n, chain, k, j):
    """Rows and columns of the ``(k, j)`` recursive subresultant matrix."""
    chain = validate_chain(m, n, chain, k)
    if k == 1:
        return m + n - j, m + n - 2 * j
    cols = m + n - 2 * chain[1]
    for l in range(2, k):
        cols *= 2 * chain[l - 1] - 2 * chain[l] - 1
    cols *= 2 * chain[k - 1] - 2 * j - 1
    return cols + j, cols


def split_previous(prev, jp):
    """``(upper, lower, lower_d)`` row lists of a previous-level matrix."""
    rows = prev.to_rows()
    upper = rows[:prev.rows - (jp + 1)]
    lower = rows[prev.rows - (jp + 1):]
    lower_d = [[(jp - i) * e for e in lower[i]] for i in range(jp)]
    return upper, lower, lower_d


def assemble(prev, jp, j):
    """Block assembly of the next-level matrix from ``prev`` at ``j_{k-1} = jp``."""
    c = prev.cols
    upper, lower, lower_d = split_previous(prev, jp)
    n_plain = jp - j - 1
    n_deriv = jp - j
    b = n_plain + n_deriv
    rows_total = b * c + j
    grid = [[0] * (b * c) for _ in range(rows_total)]
    for q in range(b):
        for r, row in enumerate(upper):
            grid[q * (c - 1) + r][q * c:(q + 1) * c] = row
    base = b * (c - 1)
    for q in range(b):
        block = lower if q < n_plain else lower_d
        offset = q if q < n_plain else q - n_plain
        for r, row in enumerate(block):
            grid[base + offset + r][q * c:(q + 1) * c] = row
    return Mat.from_rows(grid, b * c)


def rec_subres_matrix(f, g, chain, k, j, strict=False):
    """The ``(k, j)`` recursive subresultant matrix.

    With ``strict=True`` levels ``k >= 3`` are only built once the layout
    has passed the exact equivalence check at depth 3 on the reference
    family (see :func:`layout_validated`).
    """
    m, n = f.nominal_degree, g.nominal_degree
    chain = validate_chain(m, n, chain, k)
    check_level_index(m, n, chain, k, j)
    if strict and k >= 3 and not layout_validated():
        raise LayoutUnresolved(f"block layout not validated at depth {k}")
    return _rec_matrix(f, g, chain[:k], k, j)


@lru_cache(maxsize=256)
def _rec_matrix(f, g, chain, k, j):
    if k == 1:
        return subres_matrix(f, g, j)
    jp = chain[k - 1]
    prev = _rec_matrix(f, g, chain[:k - 1], k - 1, jp)
    out = assemble(prev, jp, j)
    assert out.shape == rec_dims(f.nominal_degree, g.nominal_degree, chain, k, j)
    return out


def rec_subresultant(f, g, chain, k, j, strict=False):
    """Polynomial of nominal degree ``j`` from the tau-selections of the recursive matrix."""
    return determinant_poly(rec_subres_matrix(f, g, chain, k, j, strict), j)


def rec_subres_matrix_tau(f, g, chain, k, j, tau, strict=False):
    return tau_select(rec_subres_matrix(f, g, chain, k, j, strict), j, tau)


@lru_cache(maxsize=1)
def layout_validated():
    """Exact equivalence check at ``k = 3`` on the reference depth-3 family."""
    from .families import reference_gcd_chain
    from .nested import verify_thm1

    f, g = reference_gcd_chain()
    return verify_thm1(f, g, 3, 0).status == "pass"
