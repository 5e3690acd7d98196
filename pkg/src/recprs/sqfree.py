"""Square-free decomposition read off the recursive PRS of ``(p, p')``.

Stage ``k`` of the recursive PRS ends at a multiple of
``G_k = gcd(G_{k-1}, G_{k-1}')`` with ``G_0 = p``.  With
``W_k = G_{k-1} / G_k``, the square-free factor of multiplicity ``k`` is
``W_k / W_{k+1}``.
"""

from fractions import Fraction

from .errors import ZeroPolynomial
from .poly import Poly, derivative, exact_quotient, primitive_part
from .prs import DEFAULT_RULE, recursive_prs


def gcd_tower(p, rule=DEFAULT_RULE):
    """``[G_0, G_1, ..., G_t]`` normalized primitive; the last one is 1."""
    tower = [primitive_part(p)]
    if p.degree >= 2:
        r = recursive_prs(p, derivative(p), rule)
        tower.extend(primitive_part(s.last) for s in r.stages)
    else:
        tower.append(Poly((1,)))
    return tower


def sqfree(p, rule=DEFAULT_RULE):
    """Return ``(constant, [(factor, multiplicity), ...])``.

    Factors are primitive with positive leading coefficient, pairwise
    coprime and square-free.  ``constant * prod(factor**mult) == p``.
    """
    if p.is_zero():
        raise ZeroPolynomial("square-free decomposition of zero")
    if p.degree < 1:
        return p.lc, []
    tower = gcd_tower(p, rule)
    ws = [exact_quotient(tower[i], tower[i + 1]) for i in range(len(tower) - 1)]
    ws.append(Poly((1,)))
    factors = []
    for k in range(1, len(ws)):
        q = exact_quotient(ws[k - 1], ws[k])
        if q.degree >= 1:
            factors.append((primitive_part(q), k))
    prod = Poly((1,))
    for q, e in factors:
        prod = prod * q ** e
    constant = p.lc / prod.lc
    return Fraction(constant), factors


def reconstruct(constant, factors):
    out = Poly((constant,))
    for q, e in factors:
        out = out * q ** e
    return out


def multiplicity_profile(factors):
    """Sorted ``[(degree, multiplicity)]`` pairs, for comparisons with an oracle."""
    return sorted((q.degree, e) for q, e in factors)

