"""Randomized invariants of the polynomial core, with sympy as the independent oracle."""

import math
from fractions import Fraction

import sympy as sp
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lib.polycore import (
    MultiPoly,
    directional_derivative_form,
    divides,
    exact_quotient,
    format_poly,
    gcd,
    parse_poly,
    prs_resultant,
    square_free_part,
    sylvester_resultant,
    taylor_components,
)

X, Y, T = sp.symbols("x y t")
SYMBOLS = {"x": X, "y": Y}

coefficients = st.fractions(min_value=-6, max_value=6, max_denominator=4)
polynomials = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)), coefficients, min_size=1, max_size=5
).map(lambda terms: MultiPoly(("x", "y"), terms))

SETTINGS = settings(max_examples=200, deadline=None, derandomize=True)
# identità di valutazione: almeno mille casi ciascuna
MANY = settings(max_examples=1000, deadline=None, derandomize=True)

values = st.fractions(min_value=-5, max_value=5, max_denominator=5)
points = st.tuples(values, values)


def to_sympy(f):
    expr = sp.Integer(0)
    for exps, c in f.terms.items():
        term = sp.Rational(c.numerator, c.denominator)
        for var, e in zip(f.variables, exps):
            term *= SYMBOLS[var] ** e
        expr += term
    return sp.expand(expr)


def rational(c):
    return sp.Rational(c.numerator, c.denominator)


def from_sympy(expr):
    return parse_poly(str(sp.expand(expr)), variables=("x", "y"))


@SETTINGS
@given(polynomials)
def test_format_round_trip(f):
    text = format_poly(f)
    assert parse_poly(text, variables=f.variables) == f
    assert format_poly(parse_poly(text)) == text


@SETTINGS
@given(polynomials, polynomials)
def test_ring_operations_match_sympy(f, g):
    assert to_sympy(f * g) == sp.expand(to_sympy(f) * to_sympy(g))
    assert to_sympy(f - g) == sp.expand(to_sympy(f) - to_sympy(g))
    assert to_sympy(f ** 2) == sp.expand(to_sympy(f) ** 2)


@SETTINGS
@given(polynomials, polynomials)
def test_exact_quotient_inverts_product(f, g):
    assume(not g.is_zero())
    assert exact_quotient(f * g, g) == f


@SETTINGS
@given(polynomials, polynomials, polynomials)
def test_gcd_matches_sympy(f, g, h):
    assume(not h.is_zero())
    a, b = f * h, g * h
    assume(not a.is_zero() and not b.is_zero())
    result = gcd(a, b)
    assert divides(h, result)
    assert result.same_up_to_scalar(from_sympy(sp.gcd(to_sympy(a), to_sympy(b))))


@SETTINGS
@given(polynomials, polynomials)
def test_resultant_matches_sympy_and_subresultants(f, g):
    assume(f.degree_in("x") > 0 and g.degree_in("x") > 0)
    res = sylvester_resultant(f, g, "x")
    assert to_sympy(res) == sp.expand(sp.resultant(to_sympy(f), to_sympy(g), X))
    assert prs_resultant(f, g, "x") == res


@MANY
@given(polynomials, polynomials, points)
def test_evaluation_is_a_ring_homomorphism(f, g, p):
    assert (f * g).eval(p) == f.eval(p) * g.eval(p)
    assert (f + g).eval(p) == f.eval(p) + g.eval(p)
    assert (f - g).eval(p) == f.eval(p) - g.eval(p)


@MANY
@given(polynomials, points, points)
def test_taylor_components_sum_back(f, p, q):
    offset = [b - a for a, b in zip(p, q)]
    assert sum((c.eval(offset) for c in taylor_components(f, p)), 0) == f.eval(q)


@MANY
@given(polynomials, st.integers(1, 3), st.tuples(values, values, values), st.tuples(values, values, values))
def test_directional_form_matches_the_line_expansion(f, k, p, v):
    form = directional_derivative_form(f, k)
    at = dict(zip(("x", "y", "z", "v1", "v2", "v3"), p + v))
    value = form.eval([at[name] for name in form.variables])
    base, step = [rational(c) for c in p], [rational(c) for c in v]
    along = sp.expand(to_sympy(f).subs({X: base[0] + T * step[0], Y: base[1] + T * step[1]}, simultaneous=True))
    coefficient = sp.Rational(along.coeff(T, k)) * math.factorial(k)
    assert value == Fraction(int(coefficient.p), int(coefficient.q))


@SETTINGS
@given(polynomials, polynomials, st.integers(-3, 3), st.integers(-3, 3), st.booleans())
def test_divides_agrees_with_evaluation_on_a_graph(g, r, a, b, exact):
    # h = y - a*x - b vanishes exactly on the points (s, a*s + b)
    h = MultiPoly(("x", "y"), {(0, 1): 1, (1, 0): -a, (0, 0): -b})
    f = h * g if exact else h * g + r
    vanishing = all(f.eval((s, a * s + b)) == 0 for s in range(-4, 5))
    assert divides(h, f) == vanishing
    if exact:
        assert divides(h, f)


@SETTINGS
@given(polynomials)
def test_square_free_part_is_idempotent(f):
    assume(not f.is_zero())
    part = square_free_part(f)
    assert square_free_part(part).same_up_to_scalar(part)
    assert square_free_part(f * f).same_up_to_scalar(part)
    assert divides(part, f)
