# -*- coding: utf-8 -*-
"""
Polinomio dei flecnodi e test di rigatezza.

Un punto p di Z(f) è un flecnodo se esiste una direzione v con
nabla_v f(p) = nabla_v^2 f(p) = nabla_v^3 f(p) = 0, cioè una retta che
oscula Z(f) al terzo ordine. Le tre forme G1, G2, G3 sono omogenee in v;
la direzione viene eliminata con risultanti su due carte:

    carta v1 = 1:  Res_v2(Res_v3(G1, G2), Res_v3(G1, G3))
    carta v2 = 1:  Res_v1(Res_v3(G1, G2), Res_v3(G1, G3))

più la sola direzione rimasta fuori, (0, 0, 1), trattata per sostituzione
diretta. Il polinomio risultante si annulla su ogni flecnodo (e quindi su
ogni retta contenuta in Z(f)) ma può contenere fattori estranei.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from lib.geometry import AffPoint, ProjLine
from lib.polycore import (
    DIRECTION_VARIABLES,
    POINT_VARIABLES,
    MultiPoly,
    directional_derivative_form,
    divides,
    exact_quotient,
    gcd,
    line_coefficients,
    square_free_part,
    sylvester_resultant,
)
from lib.polycore.calculus import point_dimension
from lib.polycore.errors import PolynomialError
from lib.polycore.univariate import (
    coefficients_of,
    count_real_roots,
    degree,
    distinct_root_count,
    gcd_poly,
    rational_roots,
)
from lib.surfaces.errors import FactorMismatchError, NotOnSurfaceError

logger = logging.getLogger(__name__)

MAX_DEGREE = 6
SEARCH_RADIUS = 12
TRIAL_LIMIT = 6


class FlecnodeError(ValueError):
    pass


class Verdict(Enum):
    NOT_RULED = 1
    RULED_EVIDENCE = 2
    # q non divide fl(q) ma nessun punto razionale lo certifica
    UNCERTIFIED = 3


class LineSearch(Enum):
    NO = 1
    WITNESS = 2
    RESULTANT_ZERO = 3


def caysala_line_bound(degree):
    """Most lines an irreducible non-ruled surface of this degree can contain."""
    return 11 * degree * degree - 24 * degree


@dataclass
class FlecnodeResult:
    fl: MultiPoly
    degree: int
    construction_log: list = field(default_factory=list)

    @property
    def true_degree_bound(self):
        return 11 * self.degree - 24 if self.degree >= 3 else None

    def is_zero(self):
        return self.fl.is_zero()

    def to_json(self):
        return {
            "fl": str(self.fl),
            "degree": self.fl.degree(),
            "input_degree": self.degree,
            "true_degree_bound": self.true_degree_bound,
            "construction_log": self.construction_log,
        }


def vanishes_on_line(g, line):
    """True iff g(base + t*direction) is the zero polynomial in t."""
    g = g.embed(POINT_VARIABLES[line.dim])
    return all(c == 0 for c in line_coefficients(g, line.base.coords, line.direction))


def _check_trivariate(f):
    try:
        dim = point_dimension(f)
    except PolynomialError as exc:
        raise FlecnodeError(str(exc)) from None
    if dim != 3:
        raise FlecnodeError(f"flecnode construction needs a polynomial in x, y, z (got {f.variables})")


def _eliminate(a, b, var):
    """A polynomial in the remaining variables that vanishes wherever a and b share a root in var."""
    if a.is_zero() or b.is_zero():
        other = b if a.is_zero() else a
        if not other.is_zero() and other.degree_in(var) <= 0:
            return other
        return MultiPoly.zero(a.variables)
    da, db = a.degree_in(var), b.degree_in(var)
    if da > 0 and db > 0:
        return sylvester_resultant(a, b, var)
    if da <= 0 and db <= 0:
        return a if a.degree() <= b.degree() else b
    return a if da <= 0 else b


def _note(log, step, poly):
    log.append({"step": step, "degree": poly.degree(), "terms": len(poly.ints)})
    logger.debug(f"flecnode {step}: degree {poly.degree()}, {len(poly.ints)} terms")


def _chart(forms, fixed, first, second, log):
    g1, g2, g3 = (g.specialize(fixed, 1) for g in forms)
    r12 = _eliminate(g1, g2, first)
    _note(log, f"{fixed}=1 Res_{first}(G1, G2)", r12)
    r13 = _eliminate(g1, g3, first)
    _note(log, f"{fixed}=1 Res_{first}(G1, G3)", r13)
    result = _eliminate(r12, r13, second)
    _note(log, f"{fixed}=1 Res_{second}", result)
    return result.embed(POINT_VARIABLES[3])


def _seam(f, log):
    """First nonzero of d_z f, d_z^2 f, d_z^3 f: vanishes where (0, 0, 1) osculates."""
    g = f
    for k in range(1, 4):
        g = g.partial_derivative("z")
        if not g.is_zero():
            _note(log, f"seam d_z^{k} f", g)
            return g
    return g


def _lcm(a, b):
    return exact_quotient(a * b, gcd(a, b))


def flecnode_poly(f, max_degree=MAX_DEGREE):
    """
    A polynomial vanishing on all flecnodes of Z(f).

    Zero when any of the three forms vanishes identically (every quadric),
    or when the z-derivatives all vanish (a cylinder along z).
    """
    _check_trivariate(f)
    f = f.embed(POINT_VARIABLES[3])
    D = f.degree()
    if D < 2:
        raise FlecnodeError(f"flecnode polynomial needs degree >= 2 (got {D})")
    if D > max_degree:
        raise FlecnodeError(f"degree {D} above the flecnode limit {max_degree}")
    if square_free_part(f).degree() != D:
        raise FlecnodeError(f"{f} is not square-free")

    log = []
    forms = [directional_derivative_form(f, k, 3) for k in (1, 2, 3)]
    zero = MultiPoly.zero(POINT_VARIABLES[3])
    for k, g in enumerate(forms, start=1):
        if g.is_zero():
            log.append({"step": f"G{k} is identically zero", "degree": -1, "terms": 0})
            return FlecnodeResult(zero, D, log)

    pieces = [
        _chart(forms, "v1", "v3", "v2", log),
        _chart(forms, "v2", "v3", "v1", log),
        _seam(f, log),
    ]
    if any(p.is_zero() for p in pieces):
        return FlecnodeResult(zero, D, log)
    fl = MultiPoly.constant(1, POINT_VARIABLES[3])
    for p in pieces:
        if not p.is_constant():
            fl = _lcm(fl, square_free_part(p))
    fl = fl.embed(POINT_VARIABLES[3])
    _note(log, "combined", fl)
    return FlecnodeResult(fl, D, log)


def rational_points_on(f, radius=SEARCH_RADIUS):
    """
    Rational points of Z(f), generated in a fixed order.

    All coordinates but one run over integers with |value| <= radius (in
    shells of growing max-norm); the last one is a rational root of the
    resulting univariate polynomial.
    """
    dim = point_dimension(f)
    names = POINT_VARIABLES[dim]
    g = f.embed(names)
    seen = set()
    for r in range(radius + 1):
        for values in itertools.product(range(-r, r + 1), repeat=dim - 1):
            if max((abs(v) for v in values), default=0) != r:
                continue
            for solved in reversed(range(dim)):
                others = [n for i, n in enumerate(names) if i != solved]
                coeffs = coefficients_of(g.substitute(dict(zip(others, values))))
                if degree(coeffs) < 0:
                    roots = [Fraction(k) for k in range(3)]
                elif degree(coeffs) == 0:
                    continue
                else:
                    try:
                        roots = rational_roots(coeffs)
                    except PolynomialError:
                        continue
                for root in roots:
                    coords = list(values)
                    coords.insert(solved, root)
                    point = AffPoint(tuple(coords))
                    if point not in seen:
                        seen.add(point)
                        yield point


@dataclass
class FactorVerdict:
    factor: MultiPoly
    verdict: Verdict
    fl: MultiPoly
    certificate: AffPoint = None
    detail: str = ""

    def to_json(self):
        return {
            "factor": str(self.factor),
            "verdict": self.verdict.name,
            "fl": str(self.fl),
            "certificate": self.certificate.to_json() if self.certificate is not None else None,
            "detail": self.detail,
        }


def cayley_salmon_test(f, factors, max_degree=MAX_DEGREE, radius=SEARCH_RADIUS):
    """
    Per-factor ruledness verdicts. NOT_RULED always comes with a point of
    Z(q) where fl(q) != 0, checked again by evaluation; without one the
    verdict is UNCERTIFIED.
    """
    _check_trivariate(f)
    product = MultiPoly.constant(1)
    for q in factors:
        product = product * q
    if not factors or not product.same_up_to_scalar(f):
        raise FactorMismatchError(f"factors do not multiply to {f}")
    verdicts = []
    for q in factors:
        q = q.embed(POINT_VARIABLES[3])
        if q.degree() == 1:
            verdicts.append(FactorVerdict(q, Verdict.RULED_EVIDENCE, MultiPoly.zero(q.variables), detail="plane"))
            continue
        fl = flecnode_poly(q, max_degree).fl
        if fl.is_zero() or divides(q, fl):
            verdicts.append(FactorVerdict(q, Verdict.RULED_EVIDENCE, fl, detail="q divides fl(q)"))
            continue
        certificate = next((p for p in rational_points_on(q, radius) if fl.eval(p.coords) != 0), None)
        if certificate is None:
            logger.warning(f"No rational point of Z({q}) with fl != 0 within radius {radius}")
            verdicts.append(FactorVerdict(q, Verdict.UNCERTIFIED, fl,
                                          detail="q does not divide fl(q); no rational certificate found"))
            continue
        if q.eval(certificate.coords) != 0 or fl.eval(certificate.coords) == 0:
            raise FlecnodeError(f"certificate {certificate} does not verify for {q}")
        detail = f"fl(q) = {fl.eval(certificate.coords)} at the certificate"
        verdicts.append(FactorVerdict(q, Verdict.NOT_RULED, fl, certificate, detail))
    return verdicts


@dataclass
class LineSearchResult:
    status: LineSearch
    witnesses: list = field(default_factory=list)
    real_directions_possible: bool = False
    detail: list = field(default_factory=list)

    def to_json(self):
        return {
            "status": self.status.name,
            "witnesses": [[str(c) for c in v] for v in self.witnesses],
            "real_directions_possible": self.real_directions_possible,
            "detail": self.detail,
        }


@dataclass
class _ChartOutcome:
    witnesses: list = field(default_factory=list)
    empty: bool = True
    real_possible: bool = False

    def open(self, real):
        self.empty = False
        self.real_possible = self.real_possible or real


def _forms_at(f, p):
    """Nonzero H_k(v) = nabla_v^k f(p), k = 1..deg f, as polynomials in v1, v2, v3."""
    point = dict(zip(POINT_VARIABLES[3], p.coords))
    forms = []
    for k in range(1, f.degree() + 1):
        h = directional_derivative_form(f, k, 3).substitute(point).embed(DIRECTION_VARIABLES[3])
        if not h.is_zero():
            forms.append(h)
    return forms


def _common_root_poly(polys):
    """Gcd of univariate polynomials; None when all of them are zero."""
    lists = [coefficients_of(q) for q in polys]
    nonzero = [c for c in lists if degree(c) >= 0]
    if not nonzero:
        return None
    g = nonzero[0]
    for c in nonzero[1:]:
        g = gcd_poly(g, c)
    return g


def _solve_last(polys, prefix, outcome):
    """Rational v3 completing `prefix` to a common root of polys (univariate in v3)."""
    g = _common_root_poly(polys)
    if g is None:
        outcome.witnesses.append(prefix + (Fraction(0),))
        return
    if degree(g) <= 0:
        return
    roots = rational_roots(g)
    for r in roots:
        outcome.witnesses.append(prefix + (r,))
    if distinct_root_count(g) > len(roots):
        outcome.open(count_real_roots(g) > len(roots))


def _trial_values():
    seen = []
    for den in range(1, TRIAL_LIMIT + 1):
        for num in range(-TRIAL_LIMIT, TRIAL_LIMIT + 1):
            value = Fraction(num, den)
            if value not in seen:
                seen.append(value)
    return sorted(seen, key=lambda v: (abs(v.numerator) + v.denominator, v))


def _chart_v1(forms, log):
    outcome = _ChartOutcome()
    a = [h.specialize("v1", 1) for h in forms]
    with_v3 = [q for q in a if q.degree_in("v3") > 0]
    elim = [q for q in a if q.degree_in("v3") <= 0]
    for q1, q2 in itertools.combinations(with_v3, 2):
        elim.append(sylvester_resultant(q1, q2, "v3"))
    r = _common_root_poly(elim) if elim else None
    if r is not None and degree(r) == 0:
        log.append("chart v1=1: eliminant is a nonzero constant")
        return outcome
    if r is None:
        log.append("chart v1=1: eliminant vanishes identically; trying small rationals")
        candidates = _trial_values()
        outcome.open(True)
    else:
        candidates = rational_roots(r)
        log.append(f"chart v1=1: eliminant of degree {degree(r)}, {len(candidates)} rational roots")
        if distinct_root_count(r) > len(candidates):
            outcome.open(count_real_roots(r) > len(candidates))
    for c in candidates:
        _solve_last([q.specialize("v2", c) for q in a], (Fraction(1), c), outcome)
    return outcome


def lines_through_point_exist(f, p):
    """
    Does Z(f) contain a line through p?

    Decided on the system nabla_v^k f(p) = 0, k = 1..deg f, over the
    three direction charts v1 = 1, (v1, v2) = (0, 1) and (0, 0, 1).
    """
    _check_trivariate(f)
    f = f.embed(POINT_VARIABLES[3])
    if f.eval(p.coords) != 0:
        raise NotOnSurfaceError(f"{p} is not on Z({f})")
    forms = _forms_at(f, p)
    log = []
    outcomes = [_chart_v1(forms, log)]

    chart_b = _ChartOutcome()
    _solve_last([h.specialize("v1", 0).specialize("v2", 1) for h in forms], (Fraction(0), Fraction(1)), chart_b)
    log.append(f"chart (0,1,v3): {len(chart_b.witnesses)} rational witnesses")
    outcomes.append(chart_b)

    chart_c = _ChartOutcome()
    vertical = (Fraction(0), Fraction(0), Fraction(1))
    if all(h.eval(vertical) == 0 for h in forms):
        chart_c.witnesses.append(vertical)
    outcomes.append(chart_c)

    witnesses = []
    for outcome in outcomes:
        for v in outcome.witnesses:
            if v not in witnesses:
                witnesses.append(v)
    for v in witnesses:
        if not vanishes_on_line(f, ProjLine.through(p, v)):
            raise ArithmeticError(f"witness direction {v} at {p} does not give a contained line")
    if witnesses:
        return LineSearchResult(LineSearch.WITNESS, witnesses, True, log)
    if all(o.empty for o in outcomes):
        return LineSearchResult(LineSearch.NO, [], False, log)
    real = any(o.real_possible for o in outcomes)
    return LineSearchResult(LineSearch.RESULTANT_ZERO, [], real, log)
