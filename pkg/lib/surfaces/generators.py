# -*- coding: utf-8 -*-
"""
Generatrici in forma chiusa delle componenti quadriche rigate.

Lambda(p) è il numero di generatrici per p, zero nel vertice di un cono;
Lambda*(p) = max(0, Lambda(p) - 1).
"""

from fractions import Fraction

from lib.geometry import AffPoint, ProjLine, linalg, point_on_line
from lib.polycore import POINT_VARIABLES, line_coefficients
from lib.polycore.univariate import distinct_root_count, rational_roots
from lib.surfaces.errors import SurfaceError
from lib.surfaces.local import contains_line


class GeneratorFamily:
    kind = None
    doubly_ruled = False
    apex = None

    def __init__(self, factor):
        self.factor = factor.embed(POINT_VARIABLES[3])

    def on_surface(self, p):
        return self.factor.eval(p.coords) == 0

    def lambda_at(self, p):
        raise NotImplementedError

    def lambda_star_at(self, p):
        return max(0, self.lambda_at(p) - 1)

    def is_generator(self, line):
        return contains_line(self.factor, line) and self._admits(line)

    def _admits(self, line):
        return True

    def lambda_sum_on(self, line):
        """
        Sum of Lambda over l meet V (Lambda* when l is contained), complex
        points included. None when the sum is infinite.
        """
        coeffs = line_coefficients(self.factor, line.base.coords, line.direction)
        if all(c == 0 for c in coeffs):
            return self._contained_star_sum(line)
        if len(coeffs) == 1:
            return 0
        total = distinct_root_count(coeffs) * self.generic_lambda
        if self.apex is not None and point_on_line(self.apex, line):
            total -= self.generic_lambda
        return total

    def _contained_star_sum(self, line):
        return 0

    def generators_through(self, p):
        raise NotImplementedError

    def crossing_generators(self, line, points):
        """{p: generators through p other than the contained line}, for the points of the line."""
        if not contains_line(self.factor, line):
            raise SurfaceError(f"{line} is not contained in Z({self.factor})")
        return {p: [g for g in self.generators_through(p) if g != line]
                for p in points if point_on_line(p, line)}

    def to_json(self):
        return {"kind": self.kind}


class CylinderFamily(GeneratorFamily):
    """f independent of the axis direction: one generator, parallel to the axis, through each point."""

    kind = "cylinder"
    generic_lambda = 1

    def __init__(self, factor, axis=(0, 0, 1)):
        super().__init__(factor)
        self.axis = tuple(Fraction(v) for v in axis)
        gradient_along = sum((a * self.factor.partial_derivative(v) for a, v in zip(self.axis, POINT_VARIABLES[3])
                              if a), self.factor * 0)
        if not gradient_along.is_zero():
            raise SurfaceError(f"{self.factor} is not a cylinder along {self.axis}")

    def lambda_at(self, p):
        return 1 if self.on_surface(p) else 0

    def _admits(self, line):
        return linalg.rank([line.direction, self.axis]) == 1

    def generators_through(self, p):
        return [ProjLine.through(p, self.axis)] if self.on_surface(p) else []

    def to_json(self):
        return {"kind": self.kind, "axis": [str(v) for v in self.axis]}


class ConeFamily(GeneratorFamily):
    """Every generator passes through the apex; the apex itself counts zero."""

    kind = "cone"
    generic_lambda = 1

    def __init__(self, factor, apex):
        super().__init__(factor)
        self.apex = apex if isinstance(apex, AffPoint) else AffPoint(tuple(apex))
        if not self.on_surface(self.apex):
            raise SurfaceError(f"apex {self.apex} is not on Z({self.factor})")

    def lambda_at(self, p):
        if p == self.apex or not self.on_surface(p):
            return 0
        return 1

    def _admits(self, line):
        return point_on_line(self.apex, line)

    def generators_through(self, p):
        if p == self.apex or not self.on_surface(p):
            return []
        return [ProjLine.through(p, linalg.sub(p.coords, self.apex.coords))]

    def to_json(self):
        return {"kind": self.kind, "apex": self.apex.to_json()}


class RegulusFamily(GeneratorFamily):
    """Doubly ruled: two generators through every point."""

    kind = "regulus"
    doubly_ruled = True
    generic_lambda = 2

    def lambda_at(self, p):
        return 2 if self.on_surface(p) else 0

    def _contained_star_sum(self, line):
        return None

    def generators_through(self, p):
        """
        The two rulings through p: the tangent plane meets the quadric in
        them, so their directions are the isotropic vectors of the top form
        inside the tangent plane.
        """
        if not self.on_surface(p):
            return []
        grad = tuple(self.factor.partial_derivative(v).eval(p.coords) for v in self.factor.variables)
        q2 = self.factor.homogeneous_components()[2]
        basis = linalg.nullspace([grad])
        if len(basis) != 2:
            raise SurfaceError(f"{p} is a singular point of Z({self.factor})")
        d, u = basis
        if q2.eval(d) != 0:
            d, u = _isotropic(q2, d, u)
        return [ProjLine.through(p, d), ProjLine.through(p, _second_isotropic(q2, d, u))]


def _bilinear(q2, a, b):
    return (q2.eval(linalg.add(a, b)) - q2.eval(a) - q2.eval(b)) / 2


def _second_isotropic(q2, d, u):
    # q2(a*d + b*u) = b*(2a*B(d,u) + b*q2(u)) once q2(d) = 0
    return linalg.add(linalg.scale(d, q2.eval(u)), linalg.scale(u, -2 * _bilinear(q2, d, u)))


def _isotropic(q2, d, u):
    """An isotropic vector of the plane <d, u> and a complement, when q2 splits over the rationals."""
    if q2.eval(u) == 0:
        return u, d
    # q2(d + t*u) = q2(d) + 2t*B(d,u) + t^2*q2(u)
    a, b, c = q2.eval(u), 2 * _bilinear(q2, d, u), q2.eval(d)
    for t in rational_roots([c, b, a]):
        return linalg.add(d, linalg.scale(u, t)), u
    raise SurfaceError("rulings through the point are not rational")


def family_from_json(factor, data):
    if data is None:
        return None
    kind = data.get("kind")
    if kind == "cylinder":
        return CylinderFamily(factor, [Fraction(str(v)) for v in data.get("axis", (0, 0, 1))])
    if kind == "cone":
        return ConeFamily(factor, AffPoint.from_json(data["apex"]))
    if kind == "regulus":
        return RegulusFamily(factor)
    raise SurfaceError(f"Unknown generator family: {kind}")
