# -*- coding: utf-8 -*-
"""
Funzioni univariate su liste dense di coefficienti (dal grado basso).

Servono dove un polinomio è stato ristretto a una retta o dove tutte le
direzioni tranne una sono state eliminate: radici razionali, radici
distinte e conteggi di Sturm.
"""

import math
from fractions import Fraction

from lib.polycore.errors import PolynomialError
from lib.polycore.multipoly import MultiPoly

# Oltre questo valore la fattorizzazione per divisione di prova diventa
# troppo lenta; sopra la soglia rational_roots rinuncia.
MAX_TRIAL_DIVISION = 10 ** 16


def coefficients_of(u):
    """Dense Fraction list of a polynomial in at most one occurring variable."""
    occurring = u.occurring_variables()
    if len(occurring) > 1:
        raise PolynomialError(f"{u} is not univariate")
    if not occurring:
        return [u.constant_value()]
    return [c.constant_value() for c in u.coefficients_in(occurring[0])]


def from_coefficients(coeffs, var="t"):
    return MultiPoly((var,), {(k,): c for k, c in enumerate(coeffs) if c})


def trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    p = trim(p)
    return -1 if p == [0] else len(p) - 1


def derivative(p):
    return trim([k * c for k, c in enumerate(p)][1:] or [Fraction(0)])


def divmod_poly(a, b):
    a = [Fraction(c) for c in trim(a)]
    b = trim(b)
    if degree(b) < 0:
        raise ZeroDivisionError("univariate division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while degree(a) >= degree(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a = trim(a)
        if a == [0]:
            break
    return trim(q), a


def gcd_poly(a, b):
    a, b = trim(a), trim(b)
    while degree(b) >= 0:
        a, b = b, divmod_poly(a, b)[1]
    if degree(a) < 0:
        return [Fraction(0)]
    lead = Fraction(a[-1])
    return [Fraction(c) / lead for c in a]


def square_free(p):
    p = trim(p)
    if degree(p) <= 0:
        return [Fraction(1)]
    g = gcd_poly(p, derivative(p))
    q = divmod_poly(p, g)[0]
    lead = Fraction(q[-1])
    return [c / lead for c in q]


def distinct_root_count(p):
    """Number of distinct complex roots of a nonzero polynomial."""
    if degree(p) < 0:
        raise PolynomialError("the zero polynomial has every number as a root")
    return max(degree(square_free(p)), 0)


def _sign_changes(values):
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p):
    """Distinct real roots, by Sturm's theorem on the square-free part."""
    p = square_free(p)
    if degree(p) <= 0:
        return 0
    chain = [p, derivative(p)]
    while degree(chain[-1]) > 0:
        r = divmod_poly(chain[-2], chain[-1])[1]
        if degree(r) < 0:
            break
        chain.append([-c for c in r])
    at_plus = [q[-1] for q in chain]
    at_minus = [q[-1] * (-1) ** degree(q) for q in chain]
    return _sign_changes(at_minus) - _sign_changes(at_plus)


def _divisors(n):
    n = abs(n)
    if n > MAX_TRIAL_DIVISION:
        raise PolynomialError(f"coefficient {n} too large for rational root search")
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _integer_form(p):
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints] if g else ints


def rational_roots(p):
    """Sorted distinct rational roots of a nonzero univariate polynomial."""
    p = [Fraction(c) for c in trim(p)]
    if degree(p) < 0:
        raise PolynomialError("the zero polynomial has every number as a root")
    roots = set()
    low = 0
    while p[low] == 0:
        low += 1
    if low:
        roots.add(Fraction(0))
    core = square_free(p[low:])
    if degree(core) <= 0:
        return sorted(roots)
    ints = _integer_form(core)
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for sign in (1, -1):
                r = Fraction(sign * num, den)
                if r in roots:
                    continue
                value = Fraction(0)
                for c in reversed(core):
                    value = value * r + c
                if value == 0:
                    roots.add(r)
    return sorted(roots)
