"""Polynomial remainder sequences and the recursive PRS.

A PRS step computes ``alpha * P[i-2] = q * P[i-1] + beta * P[i]``.  The
division rule chooses ``alpha`` and ``beta``:

``euclidean``
    pseudo-remainder sequence, ``alpha = lc(P[i-1])**(d+1)``, ``beta = 1``.
``primitive``
    same ``alpha``, ``beta`` is the content of the pseudo-remainder.
``subresultant``
    Collins/Brown--Traub scalars, integer preserving without gcds.

The recursive PRS restarts on ``(P_l, P_l')`` until the last element is
a constant.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import Incomplete, ZeroInput
from .poly import content_primitive, derivative, pseudo_divide

RULES = ("euclidean", "primitive", "subresultant")
DEFAULT_RULE = "subresultant"


@dataclass(frozen=True)
class PrsStage:
    polys: tuple
    alphas: tuple
    betas: tuple
    quotients: tuple
    rule: str
    equal_degree_start: bool = False

    @property
    def length(self):
        return len(self.polys)

    @property
    def degrees(self):
        return tuple(p.degree for p in self.polys)

    @property
    def leading(self):
        return tuple(p.lc for p in self.polys)

    @property
    def gaps(self):
        d = self.degrees
        return tuple(d[i] - d[i + 1] for i in range(len(d) - 1))

    @property
    def last(self):
        return self.polys[-1]

    @property
    def complete(self):
        return self.last.is_constant()

    @property
    def normal(self):
        """True when every degree drop after the first pair is exactly one."""
        return all(g == 1 for g in self.gaps[1:])

    def check(self):
        """Re-verify the defining relation on every step."""
        for i in range(2, self.length):
            a, b = self.alphas[i - 2], self.betas[i - 2]
            lhs = self.polys[i - 2] * a
            rhs = self.quotients[i - 2] * self.polys[i - 1] + self.polys[i] * b
            if lhs != rhs or a == 0 or b == 0:
                return False
        return True


def prs(f, g, rule=DEFAULT_RULE):
    """Polynomial remainder sequence of ``f`` and ``g`` under ``rule``.

    ``deg f == deg g`` is accepted; the stage then records
    ``equal_degree_start``.
    """
    if rule not in RULES:
        raise ValueError(f"unknown division rule {rule!r}")
    if f.is_zero() or g.is_zero():
        raise ZeroInput("PRS of a zero polynomial")
    if f.degree < g.degree:
        raise ValueError(f"deg f = {f.degree} < deg g = {g.degree}")
    polys = [f, g]
    alphas, betas, quotients = [], [], []
    # subresultant bookkeeping: psi and the previous degree gap
    psi = Fraction(-1)
    delta = f.degree - g.degree
    while True:
        a, b = polys[-2], polys[-1]
        if b.is_constant():
            break
        q, r, mult = pseudo_divide(a, b)
        if r.is_zero():
            break
        if rule == "euclidean":
            beta = Fraction(1)
        elif rule == "primitive":
            beta = content_primitive(r)[0]
        else:
            if len(polys) == 2:
                beta = Fraction((-1) ** (delta + 1))
            else:
                lc_prev = a.lc
                prev_delta = polys[-3].degree - a.degree
                psi = (-lc_prev) ** prev_delta / psi ** (prev_delta - 1)
                beta = -lc_prev * psi ** (a.degree - b.degree)
        p = r * (1 / beta)
        alphas.append(mult)
        betas.append(beta)
        quotients.append(q)
        polys.append(p)
    return PrsStage(tuple(polys), tuple(alphas), tuple(betas), tuple(quotients),
                    rule, f.degree == g.degree)


@dataclass(frozen=True)
class RecursivePrs:
    stages: tuple
    gammas: tuple
    gcds: tuple = field(default=())

    @property
    def depth(self):
        return len(self.stages)

    @property
    def complete(self):
        return self.stages[-1].complete

    @property
    def degree_chain(self):
        return degree_chain(self)

    @property
    def elements(self):
        return [p for s in self.stages for p in s.polys]


def recursive_prs(f, g, rule=DEFAULT_RULE):
    """Complete recursive PRS of ``f`` and ``g``.

    ``gammas[k]`` relates the last element of stage ``k+1`` to the gcd in
    the normalization used here (primitive, positive leading coefficient):
    ``last == gammas[k] * gcds[k]``.
    """
    stages, gammas, gcds = [], [], []
    stage = prs(f, g, rule)
    while True:
        stages.append(stage)
        gamma, g_norm = content_primitive(stage.last)
        gammas.append(gamma)
        gcds.append(g_norm)
        if stage.complete:
            break
        p1 = stage.last
        stage = prs(p1, derivative(p1), rule)
    return RecursivePrs(tuple(stages), tuple(gammas), tuple(gcds))


def degree_chain(r):
    """``(j_0, j_1, ..., j_t)``: the leading degree, then each stage's last degree."""
    if not r.complete:
        raise Incomplete("degree chain of an incomplete recursive PRS")
    return (r.stages[0].polys[0].degree,) + tuple(s.last.degree for s in r.stages)
