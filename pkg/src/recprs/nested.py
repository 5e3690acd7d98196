"""Nested subresultants and their equivalence with recursive subresultants.

The nested matrix at level ``k > 1`` is the classical ``N^(j)`` of the
previous nested subresultant ``S`` (taken at ``j_{k-1}``) and its
derivative.  The entries are determinants of lower-level matrices, and
they are carried here as exact numbers.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .classic import subres_matrix, subresultant_poly
from .errors import IndexOutOfRange, RecPrsError, VanishingLeading
from .poly import derivative
from .prs import DEFAULT_RULE, recursive_prs
from .recursive import check_level_index, rec_dims, rec_subresultant, validate_chain
from .report import compare, describe, skipped


def _previous_pair(f, g, chain, k):
    jp = chain[k - 1]
    s = _nested(f, g, chain[:k - 1], k - 1, jp)
    if s.coeff(jp) == 0:
        raise VanishingLeading(f"leading coefficient of the level-{k - 1} subresultant vanishes")
    return s, derivative(s).with_nominal(jp - 1)


@lru_cache(maxsize=512)
def _nested(f, g, chain, k, j):
    if k == 1:
        return subresultant_poly(f, g, j)
    s, ds = _previous_pair(f, g, chain, k)
    return subresultant_poly(s, ds, j)


def _prepare(f, g, chain, k, j):
    m, n = f.nominal_degree, g.nominal_degree
    chain = validate_chain(m, n, chain, k)
    check_level_index(m, n, chain, k, j)
    return chain[:k]


def nested_matrix(f, g, chain, k, j):
    chain = _prepare(f, g, chain, k, j)
    if k == 1:
        return subres_matrix(f, g, j)
    s, ds = _previous_pair(f, g, chain, k)
    mat = subres_matrix(s, ds, j)
    jp = chain[k - 1]
    assert mat.shape == (2 * jp - 1 - j, 2 * jp - 1 - 2 * j)
    return mat


def nested_subresultant(f, g, chain, k, j):
    chain = _prepare(f, g, chain, k, j)
    return _nested(f, g, chain, k, j)


@dataclass(frozen=True)
class Thm1Constants:
    u_kj: int
    b_kj: int
    r_kj: int
    R_prev: Fraction

    @property
    def predicted_factor(self):
        return self.R_prev ** self.b_kj * self.r_kj


def _sign(u_prev, b):
    # exponent (u_prev - 1) * (1 + 2 + ... + (b - 1))
    return -1 if ((u_prev - 1) * (b * (b - 1) // 2)) % 2 else 1


def thm1_constants(m, n, chain, k, j):
    """Sign bookkeeping relating nested and recursive subresultants."""
    chain = validate_chain(m, n, chain, k)
    if k == 1:
        return Thm1Constants(m + n - 2 * j, 1, 1, Fraction(1))
    # R_1 = 1; R_l = R_{l-1}**b_l * r_l with b_l, r_l taken at j = j_l
    big_r = Fraction(1)
    for l in range(2, k):
        b_l = 2 * chain[l - 1] - 2 * chain[l] - 1
        u_prev = rec_dims(m, n, chain, l - 1, chain[l - 1])[1]
        big_r = big_r ** b_l * _sign(u_prev, b_l)
    b = 2 * chain[k - 1] - 2 * j - 1
    u_prev = rec_dims(m, n, chain, k - 1, chain[k - 1])[1]
    u = rec_dims(m, n, chain, k, j)[1]
    return Thm1Constants(u, b, _sign(u_prev, b), big_r)


def in_theorem_range(chain, k, j, n):
    """``(k, j)`` pairs the theorems cover: ``j <= j_{k-1} - 2`` (and ``j < n`` at k=1)."""
    if k == 1:
        return 0 <= j < n
    return 0 <= j <= chain[k - 1] - 2


def verify_thm1(f, g, k, j, rule=DEFAULT_RULE, seed=None, strict=False):
    """Check ``nested == factor * recursive`` exactly at ``(k, j)``."""
    instance = describe(f, g, seed)
    try:
        r = recursive_prs(f, g, rule)
        chain = r.degree_chain
        if k > r.depth or not in_theorem_range(chain, k, j, g.degree):
            raise IndexOutOfRange(f"(k, j) = ({k}, {j}) outside the chain {chain}")
        consts = thm1_constants(f.degree, g.degree, chain, k, j)
        lhs = nested_subresultant(f, g, chain, k, j)
        rhs = rec_subresultant(f, g, chain, k, j, strict=strict)
    except RecPrsError as exc:
        return skipped(1, k, j, exc.code, instance)
    return compare(1, k, j, lhs, rhs, consts.predicted_factor, instance)
