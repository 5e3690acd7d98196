"""Reduced nested subresultants: flat matrices of size at most ``m + n``.

Level ``k > 1`` starts from the level-``(k-1)`` reduced matrix at
``j = j_{k-1}``.  Its top ``C - 1`` rows are ``(U | v)``, where ``U`` is
square.  Its bottom ``j_{k-1} + 1`` rows are the border rows.  Put a
border row under ``(U | v)`` and the determinant is one coefficient
``A_tau`` of the previous level.  The matrix ``H = N^(j)(A, A')`` then
has entries ``H[p][q] = det([[U, v], [b_pq, g_pq]])``, where
``(b_pq | g_pq)`` is a border row scaled by 1 (an ``A`` column) or by
``tau`` (an ``A'`` column).  Structural zeros use the zero row.

Row operations against ``(U | v)`` make every ``b_pq`` in row ``p``
equal to ``b_p1``:

    x_pq @ U = b_p1 - b_pq,        h_pq = g_pq + x_pq @ v

Sylvester's identity then folds ``H`` into a single flat matrix whose
top block is ``(U | v v ... v)`` and whose row ``p`` is
``(b_p1, g_p1, h_p2, ..., h_pJ)``.

The shorter variant ``x_pq @ U = b_p1``, ``h_pq = x_pq @ v`` does not
reproduce the hand-worked ``m=6, n=5`` case.  That case needs the
right-hand side ``b_p1 - b_pq`` and the ``g_pq`` term, as above.  The
exact nested-vs-reduced checks pass with these formulas.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .classic import determinant_poly, subres_matrix, tau_select
from .errors import IndexOutOfRange, RecPrsError, SingularU, VanishingLeading
from .matrix import Mat, RowSolver, det
from .nested import in_theorem_range, nested_subresultant
from .poly import Poly
from .prs import DEFAULT_RULE, recursive_prs
from .recursive import check_level_index, validate_chain
from .report import compare, describe, skipped


def reduced_dims(m, n, k, j):
    cols = m + n - 2 * (k - 1) - 2 * j
    return cols + j, cols


@dataclass(frozen=True)
class ReducedLevel:
    """Everything level ``k`` shares across ``j``: ``U``, ``v``, border rows, ``A``."""

    k: int
    jp: int
    U: Mat
    v: tuple
    lower: tuple
    A_coeffs: tuple
    solver: RowSolver
    det_U: Fraction

    def entry(self, p, q, j):
        """``(b_pq, g_pq, H_pq)`` for ``H = N^(j)(A, A')``, 0-based ``p, q``."""
        jp = self.jp
        n_plain = jp - 1 - j
        if q < n_plain:
            shift, scale = p - q, 1
            if not 0 <= shift <= jp:
                return None
        else:
            shift = p - (q - n_plain)
            if not 0 <= shift <= jp - 1:
                return None
            scale = jp - shift
        tau = jp - shift
        h = scale * self.A_coeffs[tau]
        if h == 0:
            return None
        row = self.lower[shift]
        return [scale * e for e in row[:-1]], scale * row[-1], h


def _level(f, g, chain, k):
    """Build the shared level data from the previous reduced matrix."""
    jp = chain[k - 1]
    prev = _reduced(f, g, chain[:k - 1], k - 1, jp)
    c = prev.cols
    rows = prev.to_rows()
    top = rows[:c - 1]
    lower = tuple(tuple(r) for r in rows[c - 1:])
    assert len(lower) == jp + 1
    u = Mat.from_rows([r[:-1] for r in top], c - 1)
    v = tuple(r[-1] for r in top)
    assert u.rows == reduced_dims(f.nominal_degree, g.nominal_degree, k - 1, jp)[1] - 1
    a_coeffs = tuple(det(Mat.from_rows(top + [list(lower[jp - tau])], c))
                     for tau in range(jp + 1))
    if a_coeffs[jp] == 0:
        raise VanishingLeading(f"leading coefficient of the level-{k - 1} reduced subresultant vanishes")
    det_u = det(u)
    if det_u == 0:
        raise SingularU(f"U at level {k} is singular")
    return ReducedLevel(k, jp, u, v, lower, a_coeffs, RowSolver(u), det_u)


_level_cached = lru_cache(maxsize=256)(_level)


def _bordered_row(level, p, j, width):
    """Row ``p`` of the reduced matrix below the ``(U | v ... v)`` block."""
    jp = level.jp
    big_j = 2 * jp - 2 * j - 1
    zero = [Fraction(0)] * level.U.rows
    first = level.entry(p, 0, j)
    b1, g1 = (first[0], first[1]) if first else (zero, Fraction(0))
    out = list(b1) + [g1]
    for q in range(1, big_j):
        e = level.entry(p, q, j)
        bq, gq = (e[0], e[1]) if e else (zero, Fraction(0))
        if bq == b1:
            out.append(gq)
            continue
        x = level.solver.solve([a - b for a, b in zip(b1, bq)])
        out.append(gq + sum((xi * vi for xi, vi in zip(x, level.v)), Fraction(0)))
    assert len(out) == width
    return out


@lru_cache(maxsize=256)
def _reduced(f, g, chain, k, j):
    if k == 1:
        return subres_matrix(f, g, j)
    level = _level_cached(f, g, chain, k)
    jp = level.jp
    big_j = 2 * jp - 2 * j - 1
    big_i = big_j + j
    width = level.U.rows + big_j
    top = [list(level.U.row(r)) + [level.v[r]] * big_j for r in range(level.U.rows)]
    bottom = [_bordered_row(level, p, j, width) for p in range(big_i)]
    out = Mat.from_rows(top + bottom, width)
    assert out.shape == reduced_dims(f.nominal_degree, g.nominal_degree, k, j)
    return out


def _prepare(f, g, chain, k, j):
    m, n = f.nominal_degree, g.nominal_degree
    chain = validate_chain(m, n, chain, k)
    check_level_index(m, n, chain, k, j)
    return chain[:k]


def reduced_level(f, g, chain, k):
    """The shared ``U``, ``v``, border rows and ``A`` coefficients of level ``k >= 2``."""
    if k < 2:
        raise IndexOutOfRange("level data exists only for k >= 2")
    m, n = f.nominal_degree, g.nominal_degree
    chain = validate_chain(m, n, chain, k)
    return _level_cached(f, g, chain[:k], k)


def reduced_matrix(f, g, chain, k, j):
    chain = _prepare(f, g, chain, k, j)
    return _reduced(f, g, chain, k, j)


def reduced_subresultant(f, g, chain, k, j):
    return determinant_poly(reduced_matrix(f, g, chain, k, j), j)


def reduced_matrix_tau(f, g, chain, k, j, tau):
    return tau_select(reduced_matrix(f, g, chain, k, j), j, tau)


def h_matrix(f, g, chain, k, j):
    """``H = N^(j)(A, A')`` built from the level's ``A`` coefficients."""
    level = reduced_level(f, g, chain, k)
    a = Poly(level.A_coeffs, nominal_degree=level.jp)
    da = Poly([i * c for i, c in enumerate(level.A_coeffs)][1:], nominal_degree=level.jp - 1)
    return subres_matrix(a, da, j)


@dataclass(frozen=True)
class Thm2Constants:
    J_kj: int
    I_kj: int
    B_hat_kj: Fraction
    B_hat_prev: Fraction
    R_hat_prev: Fraction

    @property
    def predicted_factor(self):
        return (self.R_hat_prev * self.B_hat_prev) ** self.J_kj * self.B_hat_kj


def thm2_constants(f, g, chain, k, j):
    """Scalars relating nested and reduced nested subresultants at ``(k, j)``.

    ``B_l`` is ``B_{l, j_l} = det(U^(l))**(J_{l, j_l} - 1)`` for ``l >= 2``
    and 1 for ``l = 1``; ``R_1 = R_2 = 1`` and
    ``R_l = (R_{l-1} * B_{l-1})**J_{l, j_l}``.
    """
    m, n = f.nominal_degree, g.nominal_degree
    chain = validate_chain(m, n, chain, k)
    if k == 1:
        return Thm2Constants(m + n - 2 * j, m + n - j, Fraction(1), Fraction(1), Fraction(1))
    r_hat, b_hat = Fraction(1), Fraction(1)
    for l in range(2, k):
        j_l = chain[l]
        big_j_l = 2 * chain[l - 1] - 2 * j_l - 1
        r_hat = (r_hat * b_hat) ** big_j_l
        b_hat = reduced_level(f, g, chain, l).det_U ** (big_j_l - 1)
    big_j = 2 * chain[k - 1] - 2 * j - 1
    b_kj = reduced_level(f, g, chain, k).det_U ** (big_j - 1)
    return Thm2Constants(big_j, big_j + j, b_kj, b_hat, r_hat)


def verify_thm2(f, g, k, j, rule=DEFAULT_RULE, seed=None):
    """Check ``nested == factor * reduced`` exactly at ``(k, j)``."""
    instance = describe(f, g, seed)
    try:
        r = recursive_prs(f, g, rule)
        chain = r.degree_chain
        if k > r.depth or not in_theorem_range(chain, k, j, g.degree):
            raise IndexOutOfRange(f"(k, j) = ({k}, {j}) outside the chain {chain}")
        consts = thm2_constants(f, g, chain, k, j)
        lhs = nested_subresultant(f, g, chain, k, j)
        rhs = reduced_subresultant(f, g, chain, k, j)
    except RecPrsError as exc:
        return skipped(2, k, j, exc.code, instance)
    return compare(2, k, j, lhs, rhs, consts.predicted_factor, instance)


def proportionality_check(f, g, rule=DEFAULT_RULE):
    """Compare reduced nested subresultants with recursive PRS elements.

    For each stage ``k`` and each stage element of degree
    ``j <= j_{k-1} - 2``, the reduced nested subresultant of index ``j``
    should be a nonzero rational multiple of that element.  Defective
    stages are included: the subresultant indexed by an element's degree
    is similar to it whatever the degree gaps.  Returns a
    list of reports.  The ``theorem`` tag 0 marks this check.  The ``factor``
    field holds the multiple ``S_hat / P``.
    """
    from .poly import proportionality_factor

    r = recursive_prs(f, g, rule)
    chain = r.degree_chain
    out = []
    for k, stage in enumerate(r.stages, start=1):
        for p in stage.polys[2:]:
            j = p.degree
            if not in_theorem_range(chain, k, j, g.degree):
                continue
            try:
                s_hat = reduced_subresultant(f, g, chain, k, j)
            except RecPrsError as exc:
                out.append(skipped(0, k, j, exc.code))
                continue
            c = proportionality_factor(s_hat, p)
            if c is None or c == 0:
                rep = compare(0, k, j, s_hat, p, Fraction(0))
                rep.status, rep.reason = "fail", "NOT_PROPORTIONAL"
                out.append(rep)
            else:
                out.append(compare(0, k, j, s_hat, p, c))
    return out
