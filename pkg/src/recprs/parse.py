"""Parser for univariate polynomial expressions in ``x``.

Grammar (whitespace ignored)::

    poly  := [sign] term (sign term)*
    term  := coeff ['*'] ['x' ['^' uint]] | 'x' ['^' uint]
    coeff := int | int '/' uint

A leading sign is accepted so that rendered polynomials parse back.
"""

from fractions import Fraction

from .errors import ParseError
from .poly import Poly


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def uint(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an unsigned integer", start)
        return int(self.text[start:self.pos])

    def power(self):
        if self.peek() == "^":
            self.pos += 1
            return self.uint()
        return 1

    def term(self):
        ch = self.peek()
        if ch == "x":
            self.pos += 1
            return Fraction(1), self.power()
        if not ch.isdigit():
            raise ParseError(f"unexpected {ch!r}" if ch else "unexpected end of input", self.pos)
        coeff = Fraction(self.uint())
        if self.peek() == "/":
            self.pos += 1
            at = self.pos
            den = self.uint()
            if den == 0:
                raise ParseError("zero denominator", at)
            coeff /= den
        star = self.peek() == "*"
        if star:
            self.pos += 1
        if self.peek() == "x":
            self.pos += 1
            return coeff, self.power()
        if star:
            raise ParseError("expected 'x' after '*'", self.pos)
        return coeff, 0

    def parse(self):
        terms = {}
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            c, e = self.term()
            terms[e] = terms.get(e, Fraction(0)) + sign * c
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                raise ParseError(f"unexpected {ch!r}", self.pos)
            sign = -1 if ch == "-" else 1
            self.pos += 1
        top = max(terms)
        return Poly([terms.get(i, 0) for i in range(top + 1)])


def parse_poly(text):
    """Parse ``text`` into an exact :class:`Poly`; raises :class:`ParseError`."""
    return _Parser(text).parse()
