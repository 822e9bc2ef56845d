"""Expression grammar: parsing and canonical printing.

The textual form used by relation files, the command line and all reports:
identifiers like ``E`` or ``a.1.2`` (for a generator with an upper/lower index
pair), scalar literals ``3``, ``-1/2``, ``i``, ``q^2``, ``q^(-1)``,
``q^(3/2)``, operators ``+ - *`` and parentheses.  Juxtaposition is not
multiplication; ``*`` is required.  ``parse_poly(format_poly(p)) == p`` holds
for every canonical polynomial.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .freealg import Alphabet, NcPoly
from .scalars import G_ONE, GaussRat, QLaurent, QL_ONE


class ParseError(ValueError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*(?:\.\d+\.\d+)?)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"bad character at position {pos}: {text[pos:pos + 10]!r}")
            break
        if m.group("num"):
            out.append(("num", int(m.group("num"))))
        elif m.group("name"):
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    out.append(("end", None))
    return out


class _Parser:
    def __init__(self, alphabet: Alphabet, text: str):
        self.alphabet = alphabet
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def next(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect_op(self, op):
        kind, val = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, got {val!r}")

    def parse(self) -> NcPoly:
        p = self.expr()
        kind, val = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input at token {val!r}")
        return p

    def expr(self) -> NcPoly:
        negate = False
        if self.peek() == ("op", "-"):
            self.next()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            _, op = self.next()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> NcPoly:
        acc = self.factor()
        while self.peek() == ("op", "*"):
            self.next()
            acc = acc * self.factor()
        return acc

    def factor(self) -> NcPoly:
        kind, val = self.next()
        if kind == "num":
            frac = Fraction(val)
            if self.peek() == ("op", "/"):
                self.next()
                k2, v2 = self.next()
                if k2 != "num":
                    raise ParseError("expected integer denominator")
                frac = Fraction(val, v2)
            return NcPoly.scalar(self.alphabet, QLaurent({0: GaussRat(frac)}))
        if kind == "name":
            if val == "i":
                return NcPoly.scalar(self.alphabet, QLaurent.unit_i())
            if val == "q":
                half = 2
                if self.peek() == ("op", "^"):
                    self.next()
                    half = self.exponent_half_steps()
                return NcPoly.scalar(self.alphabet, QLaurent.q_power(half))
            return NcPoly.gen(self.alphabet, val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        if kind == "op" and val == "-":
            return -self.factor()
        raise ParseError(f"unexpected token {val!r}")

    def exponent_half_steps(self) -> int:
        """Exponent of q: integer n (2n half-steps) or (n/2) forms."""
        kind, val = self.next()
        if kind == "num":
            return 2 * val
        if kind == "op" and val == "-":
            k2, v2 = self.next()
            if k2 != "num":
                raise ParseError("expected integer exponent after -")
            return -2 * v2
        if kind == "op" and val == "(":
            sign = 1
            kind, val = self.next()
            if kind == "op" and val == "-":
                sign = -1
                kind, val = self.next()
            if kind != "num":
                raise ParseError("expected integer in exponent")
            num = val
            half = False
            if self.peek() == ("op", "/"):
                self.next()
                k2, v2 = self.next()
                if k2 != "num" or v2 != 2:
                    raise ParseError("only /2 exponents are supported")
                half = True
            self.expect_op(")")
            return sign * (num if half else 2 * num)
        raise ParseError("malformed exponent")


def parse_poly(alphabet: Alphabet, text: str) -> NcPoly:
    return _Parser(alphabet, text).parse()


_EMPTY = Alphabet(())


def parse_scalar(text: str) -> QLaurent:
    p = _Parser(_EMPTY, text).parse()
    return p.coeff(())


# -- printing ----------------------------------------------------------


def _format_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _format_qpower(half: int) -> str:
    if half == 0:
        return ""
    if half % 2 == 0:
        e = half // 2
        if e == 1:
            return "q"
        return f"q^{e}" if e > 0 else f"q^({e})"
    return f"q^({half}/2)"


def _signed_monomial(c: GaussRat, half: int, word_str: str):
    """Return (negative, body) for c*q^(half/2)*word with c real or imaginary."""
    parts = []
    if c.im == 0:
        neg = c.re < 0
        mag = abs(c.re)
        num = None if mag == 1 else _format_fraction(mag)
    elif c.re == 0:
        neg = c.im < 0
        mag = abs(c.im)
        num = "i" if mag == 1 else _format_fraction(mag) + "*i"
    else:
        neg = False
        num = f"({_format_fraction(c.re)} + {_format_fraction(c.im)}*i)"
    if num:
        parts.append(num)
    qp = _format_qpower(half)
    if qp:
        parts.append(qp)
    if word_str:
        parts.append(word_str)
    if not parts:
        parts.append("1")
    return neg, "*".join(parts)


def format_scalar(c: QLaurent) -> str:
    if c.is_zero:
        return "0"
    pieces = []
    for half in sorted(c.terms):
        neg, body = _signed_monomial(c.terms[half], half, "")
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


def _term_string(c: QLaurent, word_str: str):
    """Render one polynomial term; returns (negative, body)."""
    if len(c.terms) == 1:
        ((half, g),) = c.terms.items()
        return _signed_monomial(g, half, word_str)
    inner = format_scalar(c)
    body = f"({inner})"
    if word_str:
        body += "*" + word_str
    return False, body


def format_poly(p: NcPoly) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for w in sorted(p.terms, key=lambda w: (len(w), w)):
        word_str = p.alphabet.word_name(w) if w else ""
        neg, body = _term_string(p.terms[w], word_str)
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)
