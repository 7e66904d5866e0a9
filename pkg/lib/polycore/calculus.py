# -*- coding: utf-8 -*-
"""Sviluppi di Taylor, forme delle derivate direzionali e restrizione a una retta."""

from fractions import Fraction

from lib.polycore.errors import ArityError, PolynomialError, UnknownVariableError
from lib.polycore.multipoly import DIRECTION_VARIABLES, POINT_VARIABLES, MultiPoly, as_fraction


def evaluate(f, point):
    return f.eval(point)


def partial_derivative(f, var):
    return f.partial_derivative(var)


def shift(f, p):
    """f(p + x) in the same variables."""
    p = [as_fraction(v) for v in p]
    if len(p) != f.nvars:
        raise ArityError(f"Shift of length {len(p)} for variables {f.variables}.")
    images = {}
    for var, value in zip(f.variables, p):
        if value:
            images[var] = MultiPoly.variable(var, f.variables) + value
    return f.substitute(images) if images else f


def taylor_components(f, p):
    """Homogeneous components f_0..f_deg of f(p + x)."""
    if f.is_zero():
        return []
    return shift(f, p).homogeneous_components()


def point_dimension(f):
    """Ambient dimension of the point variables of f: 3 or 4."""
    names = set(f.variables)
    if names <= set(POINT_VARIABLES[3]):
        return 3
    if names <= set(POINT_VARIABLES[4]):
        return 4
    raise UnknownVariableError(f"{f.variables} are not point variables x, y, z, w.")


def directional_derivative_form(f, k, dim=None):
    """
    nabla_v^k f as a polynomial in the point variables and v1..vd.

    Applica k volte l'operatore v . grad; per k > deg f il risultato è zero.
    """
    if not isinstance(k, int) or k < 1:
        raise PolynomialError(f"Derivative order must be a positive integer, got {k!r}.")
    dim = dim or point_dimension(f)
    points = POINT_VARIABLES[dim]
    directions = DIRECTION_VARIABLES[dim]
    g = f.embed(points + directions)
    vs = [MultiPoly.variable(v, g.variables) for v in directions]
    for _ in range(k):
        if g.is_zero():
            break
        nxt = MultiPoly.zero(g.variables)
        for x, v in zip(points, vs):
            d = g.partial_derivative(x)
            if not d.is_zero():
                nxt = nxt + v * d
        g = nxt
    return g


def _newton_to_monomial(values):
    """Coefficients (low to high) of the polynomial through (j, values[j])."""
    coef = list(values)
    n = len(coef) - 1
    for j in range(1, n + 1):
        for i in range(n, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / j
    result = [coef[n]]
    for i in range(n - 1, -1, -1):
        # result * (t - i) + coef[i]
        nxt = [Fraction(0)] * (len(result) + 1)
        for idx, c in enumerate(result):
            nxt[idx + 1] += c
            nxt[idx] -= i * c
        nxt[0] += coef[i]
        result = nxt
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return result


def line_coefficients(f, base, direction):
    """Coefficients (low to high) of t -> f(base + t*direction)."""
    base = [as_fraction(v) for v in base]
    direction = [as_fraction(v) for v in direction]
    if len(base) != f.nvars or len(direction) != f.nvars:
        raise ArityError(f"Line of dimension {len(base)} for variables {f.variables}.")
    if f.is_zero():
        return [Fraction(0)]
    top = f.degree()
    values = [f.eval([b + j * d for b, d in zip(base, direction)]) for j in range(top + 1)]
    return _newton_to_monomial(values)


def restrict_to_line(f, base, direction, var="t"):
    """Univariate polynomial t -> f(base + t*direction)."""
    coeffs = line_coefficients(f, base, direction)
    return MultiPoly((var,), {(k,): c for k, c in enumerate(coeffs) if c})


def order_at_zero(coeffs):
    """Index of the first nonzero coefficient; None for the zero polynomial."""
    for k, c in enumerate(coeffs):
        if c:
            return k
    return None
