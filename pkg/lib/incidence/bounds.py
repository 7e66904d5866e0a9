# -*- coding: utf-8 -*-
"""
Valutazione dei limiti superiori sulle incidenze con costante esplicita C.

Le potenze con esponente razionale sono racchiuse tra due razionali
diadici ottenuti da radici intere (sympy.integer_nthroot); il fattore
2^sqrt(log2 m) passa per l'aritmetica a intervalli di mpmath. Ogni valore
è quindi un intervallo [lo, hi] che contiene quello vero, e un limite è
rispettato quando I <= lo.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv
from mpmath.libmp import to_rational
from sympy import integer_nthroot

from lib.incidence.errors import IncidenceError, MissingParameterError

logger = logging.getLogger(__name__)

PRECISION_BITS = 64
DEFAULT_C = Fraction(10)
XI_BITS = 16


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    @classmethod
    def exact(cls, value):
        value = Fraction(value)
        return cls(value, value)

    def __add__(self, other):
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __mul__(self, other):
        # nonnegative operands only
        other = _as_interval(other)
        return Interval(self.lo * other.lo, self.hi * other.hi)

    __rmul__ = __mul__

    def contains(self, value):
        return self.lo <= value <= self.hi

    def to_json(self):
        return [str(self.lo), str(self.hi)]


def _as_interval(value):
    return value if isinstance(value, Interval) else Interval.exact(value)


def rational_power(x, exponent, bits=PRECISION_BITS):
    """Dyadic bracket of x**exponent for rational x >= 0 and exponent a/b >= 0."""
    x, exponent = Fraction(x), Fraction(exponent)
    if x < 0 or exponent < 0:
        raise IncidenceError(f"power {x}^{exponent} needs nonnegative operands")
    y = x ** exponent.numerator
    q = exponent.denominator
    if q == 1:
        return Interval.exact(y)
    scaled = y * 2 ** (bits * q)
    floor = scaled.numerator // scaled.denominator
    root, exact = integer_nthroot(floor, q)
    root = int(root)
    lo = Fraction(root, 2 ** bits)
    if exact and floor == scaled:
        return Interval(lo, lo)
    return Interval(lo, Fraction(root + 1, 2 ** bits))


def _iv_to_interval(value):
    a, b = value._mpi_
    return Interval(Fraction(*to_rational(a)), Fraction(*to_rational(b)))


def focs_factor(m, bits=PRECISION_BITS):
    """2^sqrt(log2 m), taken as 1 for m <= 1."""
    m = Fraction(m)
    if m <= 1:
        return Interval.exact(1)
    saved = iv.prec
    iv.prec = bits
    try:
        exponent = iv.sqrt(iv.log(iv.mpf(m.numerator) / m.denominator) / iv.log(2))
        value = iv.exp(exponent * iv.log(2))
    finally:
        iv.prec = saved
    return _iv_to_interval(value)


class _Terms:
    """Access to the parameters as bracketed powers."""

    def __init__(self, params, bits):
        self.params = params
        self.bits = bits

    def __call__(self, name, exponent=1):
        return rational_power(self.params[name], Fraction(exponent), self.bits)


def _st(t):
    return t("m", "2/3") * t("n", "2/3") + t("m") + t("n")


def _gk3(t):
    return t("m", "1/2") * t("n", "3/4") + t("m", "2/3") * t("n", "1/3") * t("s", "1/3") + t("m") + t("n")


def _focs4(t):
    main = focs_factor(t.params["m"], t.bits) * (t("m", "2/5") * t("n", "4/5") + t("m"))
    return main + t("m", "1/2") * t("n", "1/2") * t("q", "1/4") + t("m", "2/3") * t("n", "1/3") * t("s", "1/3") + t("n")


def _th13a(t):
    return (t("m", "1/2") * t("n", "1/2") * t("D", "1/2") + t("m", "2/3") * t("D", "2/3") * t("s", "1/3")
            + t("m") + t("n"))


def _th13b(t):
    return _th13a(t) + t("D", 3)


def _th14a(t):
    return (t("m", "1/2") * t("n", "1/2") * t("D") + t("m", "2/3") * t("n", "1/3") * t("s", "1/3")
            + t("n") * t("D") + t("m"))


def _th14b(t):
    return _th14a(t) + t("D", 6)


def _cormainx(t):
    return t("m", "2/3") * t("s", "2/3") + t("m") + t("n")


def _cor4dx(t):
    return (t("m", "1/2") * t("n", "1/2") * (t("D") + t("q", "1/4")) + t("m", "2/3") * t("n", "1/3") * t("s", "1/3")
            + t("n") * t("D") + t("m"))


BOUNDS = {
    "ST": (("m", "n"), _st),
    "GK3": (("m", "n", "s"), _gk3),
    "FOCS4": (("m", "n", "s", "q"), _focs4),
    "TH13A": (("m", "n", "D", "s"), _th13a),
    "TH13B": (("m", "n", "D", "s"), _th13b),
    "TH14A": (("m", "n", "D", "s"), _th14a),
    "TH14B": (("m", "n", "D", "s"), _th14b),
    "CORMAINX": (("m", "n", "s"), _cormainx),
    "COR4DX": (("m", "n", "D", "s", "q"), _cor4dx),
}


@dataclass(frozen=True)
class BoundValue:
    name: str
    C: Fraction
    params: dict
    value: Interval

    def holds(self, incidences):
        return incidences <= self.value.lo

    def ratio(self, incidences):
        """I over the lower end of the bracket, so the reported ratio never understates."""
        if self.value.lo == 0:
            return 0.0 if incidences == 0 else math.inf
        return float(Fraction(incidences) / self.value.lo)

    def to_json(self, incidences=None):
        data = {
            "name": self.name,
            "C": str(self.C),
            "params": {k: str(v) for k, v in self.params.items()},
            "value": self.value.to_json(),
            "approx": float(self.value.lo),
        }
        if incidences is not None:
            data["I"] = incidences
            data["ratio"] = self.ratio(incidences)
            data["holds"] = self.holds(incidences)
        return data


def bound_eval(name, params, C=DEFAULT_C, bits=PRECISION_BITS):
    """C times the named expression, as a bracketing interval."""
    try:
        required, formula = BOUNDS[name.upper()]
    except KeyError:
        raise IncidenceError(f"Unknown bound: {name} (known: {', '.join(BOUNDS)})") from None
    missing = [k for k in required if params.get(k) is None]
    if missing:
        raise MissingParameterError(f"bound {name} needs {', '.join(missing)}")
    values = {k: Fraction(params[k]) for k in required}
    negative = [k for k, v in values.items() if v < 0]
    if negative:
        raise IncidenceError(f"negative parameters for bound {name}: {', '.join(negative)}")
    C = Fraction(C)
    value = formula(_Terms(values, bits)) * C
    logger.debug(f"{name}{values} with C={C}: [{float(value.lo)}, {float(value.hi)}]")
    return BoundValue(name.upper(), C, values, value)


def xi_threshold(m, n, D):
    """max(3, sqrt(nD/m)) rounded down to a multiple of 2^-16."""
    if m == 0:
        return Fraction(3)
    return max(Fraction(3), rational_power(Fraction(n * D, m), Fraction(1, 2), XI_BITS).lo)
