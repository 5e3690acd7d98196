"""Named test polynomials and seeded random instance generators."""

import random

from .poly import Poly, derivative, gcd_poly

X = Poly.x()


def knuth_pair():
    """The classic pair whose subresultant PRS has degrees 8, 6, 4, 2, 1, 0."""
    f = Poly.from_descending([1, 0, 1, 0, -3, -3, 8, 2, -5])
    g = Poly.from_descending([3, 0, 5, 0, -4, -9, 21])
    return f, g


def chain_pair():
    """``f = (x-1)^2 (x+1)^2 (x+2)``, ``g = (x-1)^2 (x+1)^2``: degree chain 5, 4, 2, 0."""
    c = Poly.from_roots([1, 1, -1, -1])
    return c * (X + 2), c


def reference_gcd_chain():
    """Degrees ``m=6, n=5`` with degree chain ``(6, 4, 2, 0)``.

    The common factor is ``(x-1)^2 (x+2)^2``, so stage 2 ends at
    ``(x-1)(x+2)`` and stage 3 at a constant.  The roots are chosen so
    that ``U`` stays nonsingular at every level.
    """
    c = Poly.from_roots([1, 1, -2, -2])
    f = c * Poly.from_roots([2, -3])
    g = c * (X - 3)
    return f, g


def worked_example_pair(rng=None):
    """``m=6, n=5`` whose PRS is ``(F, G, gcd)`` with a degree-4 gcd.

    The gcd is random with integer coefficients.  ``(a_6, a_5)`` and
    ``(b_5, b_4)`` are kept linearly independent, and the gcd has degree
    exactly 4, so the degree chain is ``(6, 4, 0)`` when the gcd is
    square-free.
    """
    rng = rng or random.Random(0)
    while True:
        c = Poly([rng.randint(-4, 4) for _ in range(4)] + [rng.choice([1, 2, 3])])
        a = Poly([rng.randint(-5, 5), rng.randint(-5, 5), rng.choice([1, 2, -1])])
        b = Poly([rng.randint(-5, 5), rng.choice([1, 2, -2])])
        f, g = c * a, c * b
        fc, gc = f.descending(), g.descending()
        if fc[0] * gc[1] - fc[1] * gc[0] == 0 or gcd_poly(f, g).degree != 4:
            continue
        if gcd_poly(c, derivative(c)).degree == 0:
            return f, g


def _random_poly(rng, degree, lo=-5, hi=5):
    coeffs = [rng.randint(lo, hi) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(lo, hi)
    return Poly(coeffs + [lead])


def random_chain_pair(rng, max_deg=8, min_deg=2):
    """Random integer pair ``deg f > deg g`` sharing a factor with repeated roots.

    The common factor is ``prod (x - r_i)^{e_i}`` with small distinct roots,
    so the recursive PRS has at least two stages.
    """
    max_deg = max(max_deg, 3)
    while True:
        m = rng.randint(max(min_deg, 3), max_deg)
        n = rng.randint(max(min_deg, 2), m - 1)
        cdeg = rng.randint(1, n)
        roots = rng.sample(range(-3, 4), k=min(cdeg, 3))
        exps = [1] * len(roots)
        for _ in range(cdeg - len(roots)):
            exps[rng.randrange(len(roots))] += 1
        common = Poly((1,))
        for r, e in zip(roots, exps):
            common = common * Poly((-r, 1)) ** e
        scale = rng.choice([1, 1, 2, -1, 3])
        f = common * _random_poly(rng, m - cdeg) * scale
        g = common * _random_poly(rng, n - cdeg)
        if f.degree == m and g.degree == n:
            return f, g


def random_pair(rng, max_deg=8):
    """Random integer pair with ``deg f > deg g >= 1``; usually coprime."""
    m = rng.randint(2, max_deg)
    n = rng.randint(1, m - 1)
    return _random_poly(rng, m), _random_poly(rng, n)


def random_root_product(rng, max_total=12, max_mult=4):
    """``prod (x - r_i)^{m_i}`` with distinct small integer roots.

    Returns ``(poly, {root: multiplicity})``.
    """
    while True:
        count = rng.randint(1, 5)
        roots = rng.sample(range(-6, 7), k=count)
        mults = [rng.randint(1, max_mult) for _ in roots]
        if sum(mults) <= max_total:
            break
    p = Poly((rng.choice([1, 2, -3, 5]),))
    for r, e in zip(roots, mults):
        p = p * Poly((-r, 1)) ** e
    return p, dict(zip(roots, mults))
