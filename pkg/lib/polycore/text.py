# -*- coding: utf-8 -*-
"""
Formato testuale dei polinomi: somme esplicite di monomi, come `z - x*y`
o `3/2*x^2*y - 1/3`.

La stampa è canonica (ordine graded-lex decrescente), quindi
format(parse(format(f))) == format(f) carattere per carattere. Il parser
accetta anche parentesi, `**` e prodotti non espansi, così i file scritti
a mano restano comodi.
"""

import re
from fractions import Fraction

from lib.polycore import kernels
from lib.polycore.errors import PolynomialParseError, UnknownVariableError
from lib.polycore.multipoly import MultiPoly, sort_variables

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise PolynomialParseError(f"Unexpected character {text[pos]!r} at {pos} in {text!r}.")
        number, name, op = match.groups()
        if number is not None:
            tokens.append(("num", int(number)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", op))
        pos = match.end()
    return tokens


class _Parser:

    def __init__(self, tokens, variables):
        self.tokens = tokens
        self.pos = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        token = self.peek()
        self.pos += 1
        return token

    def expect(self, op):
        kind, value = self.take()
        if kind != "op" or value != op:
            raise PolynomialParseError(f"Expected {op!r}, found {value!r}.")

    def expr(self):
        result = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            right = self.term()
            result = result + right if op == "+" else result - right
        return result

    def term(self):
        result = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            right = self.unary()
            if op == "*":
                result = result * right
            else:
                if not right.is_constant():
                    raise PolynomialParseError("Only division by rational constants is allowed.")
                result = result / right.constant_value()
        return result

    def unary(self):
        kind, value = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            inner = self.unary()
            return -inner if value == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() in (("op", "^"), ("op", "**")):
            self.take()
            kind, value = self.take()
            if kind != "num":
                raise PolynomialParseError("Exponent must be a nonnegative integer literal.")
            return base ** value
        return base

    def atom(self):
        kind, value = self.take()
        if kind == "num":
            return MultiPoly.constant(value, self.variables)
        if kind == "name":
            return MultiPoly.variable(value, self.variables)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise PolynomialParseError(f"Unexpected token {value!r}.")


def parse_poly(text, variables=None):
    """Parse the explicit monomial-sum format into a MultiPoly."""
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialParseError("Empty polynomial text.")
    names = [value for kind, value in tokens if kind == "name"]
    if variables is None:
        variables = sort_variables(names)
    else:
        variables = sort_variables(variables)
        unknown = sorted(set(names) - set(variables))
        if unknown:
            raise UnknownVariableError(f"Variables {unknown} not in {variables}.")
    parser = _Parser(tokens, variables)
    result = parser.expr()
    if parser.pos != len(tokens):
        raise PolynomialParseError(f"Trailing input after position {parser.pos} in {text!r}.")
    return result.embed(variables)


def _format_coefficient(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f):
    """Canonical text, graded-lex descending."""
    if f.is_zero():
        return "0"
    n = f.nvars
    ordered = sorted(f.ints, key=lambda m: (kernels.total_degree(m), m), reverse=True)
    pieces = []
    for idx, m in enumerate(ordered):
        coeff = f.scalar * f.ints[m]
        factors = []
        for var, e in zip(f.variables, kernels.unpack(m, n)):
            if e == 1:
                factors.append(var)
            elif e > 1:
                factors.append(f"{var}^{e}")
        monomial = "*".join(factors)
        magnitude = abs(coeff)
        if not monomial:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{_format_coefficient(magnitude)}*{monomial}"
        if idx == 0:
            pieces.append(("-" if coeff < 0 else "") + body)
        else:
            pieces.append((" - " if coeff < 0 else " + ") + body)
    return "".join(pieces)


def parse_rational(text):
    """Rational from 'a', '-a' or 'a/b' (JSON coordinates)."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise PolynomialParseError(f"Not a rational number: {text!r}.") from e
