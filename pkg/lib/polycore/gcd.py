# -*- coding: utf-8 -*-
"""
Gcd, divisibilità e parte libera da quadrati.

Il gcd prova tre strade, dalla più economica:

1. una sonda di coprimalità: specializzando tutte le variabili tranne una
   a interi piccoli (con coefficiente di testa non nullo) il grado del gcd
   univariato maggiora il grado del gcd vero in quella variabile; se è
   zero per ogni variabile il gcd è costante;
2. il gcd euristico per valutazione e interpolazione, verificato con
   divisione esatta;
3. la sequenza dei subrisultanti con ricorsione contenuto/parte primitiva
   sull'ordine delle variabili, che non fallisce mai.
"""

import logging
import math
from fractions import Fraction

from lib.polycore import kernels
from lib.polycore.errors import NotDivisibleError, PolynomialError
from lib.polycore.multipoly import MultiPoly

logger = logging.getLogger(__name__)

# Valori provati dalla sonda di coprimalità per le variabili specializzate.
_PROBE_POINTS = (3, -5, 7, 11, -13, 17, 19, -23)


def exact_quotient(g, f):
    """g / f as a polynomial; NotDivisibleError when f does not divide g."""
    if f.is_zero():
        raise PolynomialError("division by the zero polynomial")
    g, f = g.aligned(f)
    if g.is_zero():
        return g
    q = kernels.divide_exact(g.ints, f.ints)
    if q is None:
        raise NotDivisibleError(f"{f} does not divide {g}")
    return MultiPoly.from_ints(g.variables, g.scalar / f.scalar, q)


def divides(f, g):
    """True iff g = f*h for a polynomial h (g = 0 is divisible by anything)."""
    if f.is_zero():
        raise PolynomialError("zero divisor")
    if g.is_zero():
        return True
    g, f = g.aligned(f)
    return kernels.divide_exact(g.ints, f.ints) is not None


def _probably_coprime(f, g):
    """True only when the specialized gcds certify that gcd(f, g) is constant."""
    n = f.nvars
    used = set(f.occurring_variables()) | set(g.occurring_variables())
    for i, var in enumerate(f.variables):
        if var not in used:
            continue
        if f.degree_in(var) == 0 or g.degree_in(var) == 0:
            continue
        lc = f.leading_coefficient_in(var)
        certified = False
        for attempt in range(3):
            values = [_PROBE_POINTS[(j + attempt) % len(_PROBE_POINTS)] for j in range(n)]
            point = [Fraction(v) for v in values]
            if lc.eval(point) == 0:
                continue
            uf = kernels.specialize(f.ints, n, i, values)
            ug = kernels.specialize(g.ints, n, i, values)
            degree = kernels.univariate_gcd_degree(uf, ug)
            if degree == 0:
                certified = True
                break
            if degree is not None:
                return False
        if not certified:
            return False
    return True


def gcd(f, g):
    """Greatest common divisor, normalized to graded-lex leading coefficient 1."""
    f, g = f.aligned(g)
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    variables = f.variables
    if f.is_constant() or g.is_constant():
        return MultiPoly.constant(1, variables)
    if _probably_coprime(f, g):
        return MultiPoly.constant(1, variables)
    try:
        h = kernels.heugcd(f.ints, g.ints, f.nvars)[0]
        return MultiPoly.from_ints(variables, 1, h).monic()
    except kernels.HeuristicGCDFailed:
        logger.debug(f"Heuristic gcd failed on degrees {f.degree()}, {g.degree()}; using subresultants")
    return _prs_gcd(f, g).monic()


def content_in(f, var):
    """Gcd of the coefficients of f as a polynomial in var."""
    result = MultiPoly.zero(f.variables)
    for c in f.coefficients_in(var):
        if not c.is_zero():
            result = gcd(result, c)
            if result.is_constant():
                break
    return result


def primitive_part_in(f, var):
    return exact_quotient(f, content_in(f, var))


def _main_variable(f, g):
    occurring = set(f.occurring_variables()) | set(g.occurring_variables())
    for var in reversed(f.variables):
        if var in occurring:
            return var
    return None


def _prs_gcd(f, g):
    var = _main_variable(f, g)
    if var is None:
        return MultiPoly.constant(1, f.variables)
    if f.degree_in(var) == 0:
        return _prs_gcd(f, content_in(g, var)) if not g.is_zero() else f
    if g.degree_in(var) == 0:
        return _prs_gcd(content_in(f, var), g)
    cf = content_in(f, var)
    cg = content_in(g, var)
    pf = exact_quotient(f, cf)
    pg = exact_quotient(g, cg)
    c = gcd(cf, cg)
    prs = subresultant_prs(pf, pg, var)[0]
    last = prs[-1]
    if last.degree_in(var) <= 0:
        h = MultiPoly.constant(1, f.variables)
    else:
        h = primitive_part_in(last, var)
    return c * h


def pseudo_remainder(f, g, var):
    """lc(g)^(deg f - deg g + 1) * f reduced modulo g, in var."""
    dg = g.degree_in(var)
    if dg < 0:
        raise PolynomialError("pseudo-division by zero")
    lc = g.leading_coefficient_in(var)
    x = MultiPoly.variable(var, f.variables)
    r = f
    steps = f.degree_in(var) - dg + 1
    while not r.is_zero() and r.degree_in(var) >= dg:
        j = r.degree_in(var) - dg
        lr = r.leading_coefficient_in(var)
        r = lc * r - lr * g * x ** j
        steps -= 1
    if steps > 0:
        r = r * lc ** steps
    return r


def subresultant_prs(f, g, var):
    """
    Subresultant remainder sequence of f and g in var.

    Stessa ricorrenza di dup_inner_subresultants, con coefficienti che
    sono polinomi nelle altre variabili. Ritorna (sequenza, subrisultanti
    scalari); se deg f < deg g i due polinomi vengono scambiati.
    """
    n = f.degree_in(var)
    m = g.degree_in(var)
    if n < m:
        f, g = g, f
        n, m = m, n
    if f.is_zero():
        return [], []
    one = MultiPoly.constant(1, f.variables)
    if g.is_zero():
        return [f], [one]
    prs = [f, g]
    d = n - m
    b = (-1) ** (d + 1)
    h = pseudo_remainder(f, g, var) * b
    lc = g.leading_coefficient_in(var)
    c = lc ** d
    scalars = [one, c]
    c = -c
    while not h.is_zero():
        k = h.degree_in(var)
        prs.append(h)
        f, g, m, d = g, h, k, m - k
        b = -lc * c ** d
        h = exact_quotient(pseudo_remainder(f, g, var), b)
        lc = g.leading_coefficient_in(var)
        if d > 1:
            c = exact_quotient((-lc) ** d, c ** (d - 1))
        else:
            c = -lc
        scalars.append(-c)
    return prs, scalars


def prs_resultant(f, g, var):
    """Resultant from the subresultant sequence (independent of the Sylvester route)."""
    n, m = f.degree_in(var), g.degree_in(var)
    if n <= 0 or m <= 0:
        raise PolynomialError(f"both polynomials need positive degree in {var}")
    prs, scalars = subresultant_prs(f, g, var)
    if prs[-1].degree_in(var) > 0:
        return MultiPoly.zero(prs[-1].variables)
    res = scalars[-1]
    if n < m and (n * m) % 2:
        res = -res
    return res


def monomial_content(f):
    """Largest monomial dividing f, as an exponent tuple."""
    n = f.nvars
    if f.is_zero():
        return (0,) * n
    lows = None
    for m in f.ints:
        e = kernels.unpack(m, n)
        lows = e if lows is None else tuple(min(a, b) for a, b in zip(lows, e))
    return lows


def square_free_part(f):
    """
    Prodotto dei fattori irriducibili distinti di f, a meno di uno scalare.

    gcd(f, f_x, f_y, ...) raccoglie ogni fattore con molteplicità diminuita
    di uno; dividendo si resta con i fattori semplici. I fattori monomiali
    vengono tolti prima, così i gcd lavorano su polinomi più piccoli.
    """
    if f.is_zero():
        raise PolynomialError("square_free_part of the zero polynomial")
    if f.is_constant():
        return MultiPoly.constant(1, f.variables)
    n = f.nvars
    lows = monomial_content(f)
    shift = kernels.pack(lows)
    core = MultiPoly.from_ints(f.variables, 1, {m - shift: c for m, c in f.ints.items()})
    common = core
    for var in core.variables:
        d = core.partial_derivative(var)
        if d.is_zero():
            continue
        common = gcd(common, d)
        if common.is_constant():
            break
    result = core if common.is_constant() else exact_quotient(core, common)
    mono = kernels.pack([1 if e else 0 for e in lows])
    if mono:
        result = result * MultiPoly.from_ints(f.variables, 1, {mono: 1})
    logger.debug(f"square_free_part: degree {f.degree()} -> {result.degree()} over {n} variables")
    return result.monic()


def integer_gcd_of(values):
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g
