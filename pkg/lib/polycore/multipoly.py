# -*- coding: utf-8 -*-
"""
Polinomi sparsi multivariati a coefficienti razionali.

Un MultiPoly è memorizzato come scalare razionale per polinomio intero
primitivo (coefficiente di testa lessicografico positivo): la forma è
canonica, quindi l'uguaglianza è il confronto delle due parti, e tutta
l'aritmetica pesante gira sui nuclei interi di `kernels`.

Le variabili stanno sempre nell'ordine globale x < y < z < w < v1 < v2 <
v3 < v4 < t; nomi sconosciuti vanno in coda, in ordine alfabetico.
"""

import math
from fractions import Fraction

from lib.polycore import kernels
from lib.polycore.errors import ArityError, PolynomialError, UnknownVariableError

VARIABLE_ORDER = ("x", "y", "z", "w", "v1", "v2", "v3", "v4", "t")
POINT_VARIABLES = {2: ("x", "y"), 3: ("x", "y", "z"), 4: ("x", "y", "z", "w")}
DIRECTION_VARIABLES = {2: ("v1", "v2"), 3: ("v1", "v2", "v3"), 4: ("v1", "v2", "v3", "v4")}


def _rank(name):
    try:
        return (0, VARIABLE_ORDER.index(name), "")
    except ValueError:
        return (1, 0, name)


def sort_variables(names):
    """Deduplicate and sort variable names by the global order."""
    return tuple(sorted(set(names), key=_rank))


def as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not accepted; use int, Fraction or 'a/b'")
    return Fraction(value)


class MultiPoly:
    """Sparse multivariate polynomial over the rationals."""

    __slots__ = ("variables", "scalar", "ints", "_terms", "_hash")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        ordered = sort_variables(variables)
        if len(ordered) != len(variables):
            raise PolynomialError(f"Duplicate variables in {variables}.")
        perm = [variables.index(v) for v in ordered]
        denominators = 1
        items = []
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ArityError(f"Exponent vector {exps} does not match variables {variables}.")
            if any(e < 0 for e in exps):
                raise PolynomialError(f"Negative exponent in {exps}.")
            coeff = as_fraction(coeff)
            if coeff:
                items.append((tuple(exps[i] for i in perm), coeff))
                denominators = denominators * coeff.denominator // math.gcd(denominators, coeff.denominator)
        ints = {}
        for exps, coeff in items:
            m = kernels.pack(exps)
            ints[m] = ints.get(m, 0) + coeff.numerator * (denominators // coeff.denominator)
        ints = {m: c for m, c in ints.items() if c}
        self._set(ordered, Fraction(1, denominators), ints)

    def _set(self, variables, scalar, ints):
        self.variables = variables
        self._terms = None
        self._hash = None
        if not ints or not scalar:
            self.scalar = Fraction(0)
            self.ints = {}
            return
        c, p = kernels.primitive(ints)
        self.scalar = scalar * c
        self.ints = p

    @classmethod
    def from_ints(cls, variables, scalar, ints):
        """Build from an already packed integer polynomial over sorted variables."""
        poly = cls.__new__(cls)
        poly._set(tuple(variables), Fraction(scalar), ints)
        return poly

    @classmethod
    def zero(cls, variables=()):
        return cls.from_ints(sort_variables(variables), 0, {})

    @classmethod
    def constant(cls, value, variables=()):
        value = as_fraction(value)
        return cls.from_ints(sort_variables(variables), value, {0: 1} if value else {})

    @classmethod
    def variable(cls, name, variables=()):
        variables = sort_variables(tuple(variables) + (name,))
        n = len(variables)
        i = variables.index(name)
        return cls.from_ints(variables, 1, {1 << kernels.shift_of(n, i): 1})

    # -- proprietà -------------------------------------------------------

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def terms(self):
        """Mapping exponent tuple -> nonzero Fraction."""
        if self._terms is None:
            n = self.nvars
            self._terms = {kernels.unpack(m, n): self.scalar * c for m, c in self.ints.items()}
        return self._terms

    def is_zero(self):
        return not self.ints

    def is_constant(self):
        return not self.ints or (len(self.ints) == 1 and 0 in self.ints)

    def constant_value(self):
        if not self.is_constant():
            raise PolynomialError(f"{self} is not a constant.")
        return self.scalar * self.ints.get(0, 0)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.ints:
            return -1
        return max(kernels.total_degree(m) for m in self.ints)

    def index_of(self, var):
        try:
            return self.variables.index(var)
        except ValueError:
            raise UnknownVariableError(f"Variable {var!r} not in {self.variables}.") from None

    def degree_in(self, var):
        if var not in self.variables:
            return 0 if self.ints else -1
        if not self.ints:
            return -1
        n, i = self.nvars, self.variables.index(var)
        return max(kernels.degree_of(m, n, i) for m in self.ints)

    def occurring_variables(self):
        n = self.nvars
        seen = set()
        for m in self.ints:
            for i, e in enumerate(kernels.unpack(m, n)):
                if e:
                    seen.add(self.variables[i])
        return tuple(v for v in self.variables if v in seen)

    # -- cambi di variabili ---------------------------------------------------

    def embed(self, variables):
        """Same polynomial over another (sorted) variable list."""
        target = sort_variables(variables)
        if target == self.variables:
            return self
        missing = [v for v in self.occurring_variables() if v not in target]
        if missing:
            raise UnknownVariableError(f"Cannot drop variables {missing} that occur in {self}.")
        n, k = self.nvars, len(target)
        places = [target.index(v) if v in target else None for v in self.variables]
        ints = {}
        for m, c in self.ints.items():
            exps = [0] * k
            for i, e in enumerate(kernels.unpack(m, n)):
                if e:
                    exps[places[i]] = e
            ints[kernels.pack(exps)] = c
        return MultiPoly.from_ints(target, self.scalar, ints)

    def aligned(self, other):
        """Both polynomials over the union of their variable lists."""
        if self.variables == other.variables:
            return self, other
        merged = sort_variables(self.variables + other.variables)
        return self.embed(merged), other.embed(merged)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return self.aligned(other)
        return self, MultiPoly.constant(as_fraction(other), self.variables)

    # -- aritmetica -----------------------------------------------------------

    def _combine(self, other, sign):
        a, b = self._coerce(other)
        if not b.ints:
            return a
        if not a.ints:
            return b if sign > 0 else -b
        sa, sb = a.scalar, b.scalar
        den = sa.denominator * sb.denominator // math.gcd(sa.denominator, sb.denominator)
        fa = sa.numerator * (den // sa.denominator)
        fb = sign * sb.numerator * (den // sb.denominator)
        ints = kernels.add(kernels.scale(a.ints, fa), kernels.scale(b.ints, fb))
        return MultiPoly.from_ints(a.variables, Fraction(1, den), ints)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __neg__(self):
        return MultiPoly.from_ints(self.variables, -self.scalar, self.ints)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return MultiPoly.from_ints(self.variables, self.scalar * as_fraction(other), self.ints)
        a, b = self.aligned(other)
        return MultiPoly.from_ints(a.variables, a.scalar * b.scalar, kernels.mul(a.ints, b.ints))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            if not other.is_constant():
                raise PolynomialError("use exact_quotient for division by a polynomial")
            other = other.constant_value()
        other = as_fraction(other)
        if not other:
            raise ZeroDivisionError("division of a polynomial by zero")
        return MultiPoly.from_ints(self.variables, self.scalar / other, self.ints)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise PolynomialError(f"Exponent must be a nonnegative integer, got {k!r}.")
        return MultiPoly.from_ints(self.variables, self.scalar ** k, kernels.power(self.ints, k))

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.constant(as_fraction(other), self.variables)
            except (TypeError, ValueError):
                return NotImplemented
        if self.variables != other.variables:
            a, b = self.aligned(other)
            return a.scalar == b.scalar and a.ints == b.ints
        return self.scalar == other.scalar and self.ints == other.ints

    def __hash__(self):
        if self._hash is None:
            occurring = self.occurring_variables()
            canon = self.embed(occurring) if occurring != self.variables else self
            self._hash = hash((canon.variables, canon.scalar, frozenset(canon.ints.items())))
        return self._hash

    def __bool__(self):
        return bool(self.ints)

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, variables={self.variables})"

    def __str__(self):
        from lib.polycore.text import format_poly
        return format_poly(self)

    # -- valutazione e sostituzione -------------------------------------------

    def eval(self, point):
        """Exact value at `point` (one rational per variable)."""
        point = [as_fraction(v) for v in point]
        if len(point) != self.nvars:
            raise ArityError(f"Point of length {len(point)} for variables {self.variables}.")
        if not self.ints:
            return Fraction(0)
        den = 1
        for v in point:
            den = den * v.denominator // math.gcd(den, v.denominator)
        values = [v.numerator * (den // v.denominator) for v in point]
        num, scale = kernels.evaluate(self.ints, self.nvars, values, den)
        return self.scalar * Fraction(num, scale)

    __call__ = eval

    def specialize(self, var, value):
        """Substitute a rational value for one variable (the variable stays listed)."""
        i = self.index_of(var)
        value = as_fraction(value)
        if not self.ints:
            return self
        n = self.nvars
        sh = kernels.shift_of(n, i)
        top = self.degree_in(var)
        p, q = value.numerator, value.denominator
        ints = {}
        for m, c in self.ints.items():
            e = (m >> sh) & kernels.FIELD_MASK
            rest = m - (e << sh)
            ints[rest] = ints.get(rest, 0) + c * p ** e * q ** (top - e)
        ints = {m: c for m, c in ints.items() if c}
        return MultiPoly.from_ints(self.variables, self.scalar / Fraction(q) ** top, ints)

    def substitute(self, images):
        """
        Replace variables by polynomials or rationals; `images` maps variable
        name -> MultiPoly | rational. Variables not mapped stay as they are.
        """
        images = dict(images)
        for var in images:
            self.index_of(var)
        numeric = {v: val for v, val in images.items() if not isinstance(val, MultiPoly)}
        result = self
        for var, val in numeric.items():
            result = result.specialize(var, val)
        symbolic = {v: val for v, val in images.items() if isinstance(val, MultiPoly)}
        if not symbolic:
            return result
        names = sort_variables(result.variables + tuple(w for img in symbolic.values() for w in img.variables))
        parts = {}
        for var in result.variables:
            img = symbolic.get(var)
            parts[var] = (img if img is not None else MultiPoly.variable(var, names)).embed(names)
        n = result.nvars
        cache = {}

        def power_of(var, k):
            key = (var, k)
            if key not in cache:
                cache[key] = parts[var] ** k
            return cache[key]

        total = MultiPoly.zero(names)
        for m, c in result.ints.items():
            term = MultiPoly.constant(c, names)
            for i, e in enumerate(kernels.unpack(m, n)):
                if e:
                    term = term * power_of(result.variables[i], e)
            total = total + term
        return total * result.scalar

    def coefficients_in(self, var):
        """List c_0..c_d with self = sum c_k * var^k; each c_k free of var."""
        i = self.index_of(var)
        n = self.nvars
        sh = kernels.shift_of(n, i)
        buckets = {}
        for m, c in self.ints.items():
            e = (m >> sh) & kernels.FIELD_MASK
            buckets.setdefault(e, {})[m - (e << sh)] = c
        top = max(buckets, default=-1)
        return [MultiPoly.from_ints(self.variables, self.scalar, buckets.get(k, {})) for k in range(top + 1)]

    def leading_coefficient_in(self, var):
        coeffs = self.coefficients_in(var)
        if not coeffs:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return coeffs[-1]

    def partial_derivative(self, var):
        i = self.index_of(var)
        n = self.nvars
        unit = 1 << kernels.shift_of(n, i)
        ints = {}
        for m, c in self.ints.items():
            e = kernels.degree_of(m, n, i)
            if e:
                ints[m - unit] = c * e
        return MultiPoly.from_ints(self.variables, self.scalar, ints)

    # -- forme normali -----------------------------------------------------------

    def grlex_leading(self):
        """(exponent tuple, coefficient) of the graded-lex leading term."""
        if not self.ints:
            raise PolynomialError("zero polynomial has no leading term")
        m = max(self.ints, key=lambda k: (kernels.total_degree(k), k))
        return kernels.unpack(m, self.nvars), self.scalar * self.ints[m]

    def monic(self):
        """Divide by the graded-lex leading coefficient."""
        if not self.ints:
            return self
        return self / self.grlex_leading()[1]

    def same_up_to_scalar(self, other):
        a, b = self.aligned(other)
        return a.ints == b.ints if (a.ints and b.ints) else (not a.ints and not b.ints)

    def homogeneous_components(self):
        """Components indexed by degree, from 0 to deg(self)."""
        top = self.degree()
        buckets = [dict() for _ in range(top + 1)]
        for m, c in self.ints.items():
            buckets[kernels.total_degree(m)][m] = c
        return [MultiPoly.from_ints(self.variables, self.scalar, b) for b in buckets]
