"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored in ascending order of power as
:class:`fractions.Fraction` values.  The zero polynomial has degree -1.

A polynomial may carry a *nominal* degree that is larger than its true
degree.  Subresultant matrices are built from a fixed number of
coefficients, and a determinant polynomial whose leading coefficient
happens to vanish must still be read back at its nominal length.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import ZeroDivisor, ZeroPolynomial


def _frac(value):
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class Poly:
    """Immutable dense polynomial over the rationals."""

    __slots__ = ("coeffs", "_nominal")

    def __init__(self, coeffs=(), nominal_degree=None):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        degree = len(cs) - 1
        if nominal_degree is not None and nominal_degree < degree:
            raise ValueError(
                f"nominal degree {nominal_degree} below true degree {degree}")
        self._nominal = nominal_degree

    # construction helpers

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def from_roots(cls, roots):
        """Monic polynomial with the given roots (repeated as listed)."""
        p = cls((1,))
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    @classmethod
    def from_descending(cls, coeffs):
        return cls(reversed(list(coeffs)))

    def with_nominal(self, nominal_degree):
        return Poly(self.coeffs, nominal_degree)

    # basic queries

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def nominal_degree(self):
        return self.degree if self._nominal is None else self._nominal

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def lc(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def descending(self, length=None):
        """Coefficients from ``x^(length-1)`` down to ``x^0``.

        ``length`` defaults to ``nominal_degree + 1``.
        """
        if length is None:
            length = self.nominal_degree + 1
        return [self.coeff(i) for i in range(length - 1, -1, -1)]

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    # ring operations

    def __add__(self, other):
        other = _promote(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_promote(other))

    def __rsub__(self, other):
        return _promote(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _frac(other)
            return Poly(c * a for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x0):
        return eval_at(self, x0)

    def __repr__(self):
        return f"Poly({render(self)!r})"

    def __str__(self):
        return render(self)


def _promote(value):
    if isinstance(value, Poly):
        return value
    return Poly((value,))


def derivative(p):
    return Poly(i * c for i, c in enumerate(p.coeffs) if i > 0)


def eval_at(p, x0):
    """Horner evaluation at an exact rational point."""
    x0 = _frac(x0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


def pseudo_divide(f, g):
    """Pseudo-division ``lc(g)**(deg f - deg g + 1) * f = q*g + r``.

    Returns ``(q, r, multiplier)``.  When ``deg f < deg g`` the multiplier
    is 1, the quotient zero and the remainder ``f``.
    """
    if g.is_zero():
        raise ZeroDivisor("pseudo-division by the zero polynomial")
    dg = g.degree
    if f.degree < dg:
        return Poly(), f, Fraction(1)
    lcg = g.lc
    delta = f.degree - dg + 1
    rem = list(f.coeffs)
    quo = [Fraction(0)] * delta
    gc = g.coeffs
    # classical integer-preserving loop: scale, then cancel the top term
    for step in range(delta):
        top = len(rem) - 1 - step
        i = top - dg
        lead = rem[top]
        quo = [lcg * q for q in quo]
        quo[i] += lead
        rem = [lcg * r for r in rem]
        if lead:
            for t, c in enumerate(gc):
                rem[i + t] -= lead * c
    rem = rem[:dg] if dg > 0 else []
    return Poly(quo), Poly(rem), lcg ** delta


def divmod_poly(f, g):
    """Euclidean division over the rationals: ``f = q*g + r``."""
    if g.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    rem = list(f.coeffs)
    dg = g.degree
    if len(rem) - 1 < dg:
        return Poly(), f
    inv = 1 / g.lc
    quo = [Fraction(0)] * (len(rem) - dg)
    for i in range(len(rem) - 1 - dg, -1, -1):
        c = rem[i + dg] * inv
        quo[i] = c
        if c:
            for t, gcoef in enumerate(g.coeffs):
                rem[i + t] -= c * gcoef
    return Poly(quo), Poly(rem[:dg])


def exact_quotient(f, g):
    q, r = divmod_poly(f, g)
    if not r.is_zero():
        raise ArithmeticError(f"{g} does not divide {f}")
    return q


def content_primitive(p):
    """Split ``p`` into ``content * primitive``.

    The content carries the sign of the leading coefficient, so the
    primitive part has integer coefficients with gcd 1 and a positive
    leading coefficient.  Rational inputs are handled by folding the
    common denominator into the content.
    """
    if p.is_zero():
        raise ZeroPolynomial("content of the zero polynomial")
    den = 1
    for c in p.coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if ints[-1] < 0:
        g = -g
    content = Fraction(g, den)
    return content, Poly(Fraction(v // g) for v in ints)


def primitive_part(p):
    return content_primitive(p)[1]


def monic(p):
    if p.is_zero():
        raise ZeroPolynomial("monic of the zero polynomial")
    return p * (1 / p.lc)


def gcd_poly(f, g):
    """Primitive, positive-leading gcd by the rational Euclidean algorithm."""
    while not g.is_zero():
        f, g = g, divmod_poly(f, g)[1]
    if f.is_zero():
        raise ZeroPolynomial("gcd of two zero polynomials")
    return primitive_part(f)


def proportionality_factor(p, q):
    """Return ``c`` with ``p == c*q`` or ``None`` when no such ``c`` exists.

    Both polynomials must be nonzero for a factor to exist.
    """
    if p.is_zero() or q.is_zero() or p.degree != q.degree:
        return None
    c = p.lc / q.lc
    if p == q * c:
        return c
    return None


def _fmt_coeff(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render(p):
    """Text form accepted back by :func:`recprs.parse.parse_poly`."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if i == 0:
            body = _fmt_coeff(a)
        else:
            mono = "x" if i == 1 else f"x^{i}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
