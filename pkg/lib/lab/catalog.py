# -*- coding: utf-8 -*-
"""
Catalogo delle superfici di prova: polinomio, rette razionali contenute
in forma chiusa e, per le quadriche rigate, la famiglia delle generatrici.

Le rette di ogni voce sono prodotte in un ordine fisso, così due
generazioni con gli stessi parametri danno la stessa configurazione.
"""

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from lib.geometry import AffPoint, ProjLine
from lib.polycore import parse_poly
from lib.surfaces import ConeFamily, CylinderFamily, RegulusFamily, SurfaceModel


class GeneratorError(ValueError):
    """Invalid generator request."""


def small_integers():
    """0, 1, -1, 2, -2, ..."""
    yield 0
    for k in itertools.count(1):
        yield k
        yield -k


def pythagorean_triples():
    """Primitive (k^2 - l^2, 2kl, k^2 + l^2), k > l >= 1 coprime of opposite parity, by increasing k."""
    for k in itertools.count(2):
        for l in range(1, k):
            if (k - l) % 2 == 1 and math.gcd(k, l) == 1:
                yield (k * k - l * l, 2 * k * l, k * k + l * l)


def unit_circle_points():
    """Rational points of x^2 + y^2 = 1 from the primitive triples, with sign and swap variants."""
    yield (Fraction(1), Fraction(0))
    yield (Fraction(0), Fraction(1))
    yield (Fraction(-1), Fraction(0))
    yield (Fraction(0), Fraction(-1))
    for a, b, c in pythagorean_triples():
        for x, y in ((a, b), (b, a)):
            for sx, sy in ((1, 1), (-1, 1), (1, -1), (-1, -1)):
                yield (Fraction(sx * x, c), Fraction(sy * y, c))


def _take(iterable, count):
    return list(itertools.islice(iterable, count))


def regulus_lines(count):
    """Rulings x = a and y = b of z = xy, alternating between the two families."""
    def both():
        for a in small_integers():
            yield ProjLine.through((a, 0, 0), (0, 1, a))
            yield ProjLine.through((0, a, 0), (1, 0, a))
    return _take(both(), count)


def parabolic_cylinder_lines(count):
    return [ProjLine.through((a, a * a, 0), (0, 0, 1)) for a in itertools.islice(small_integers(), count)]


def cone_lines(count):
    return [ProjLine.through((0, 0, 0), triple) for triple in itertools.islice(pythagorean_triples(), count)]


def hyperboloid_lines(count):
    """Both rulings of x^2 + y^2 - z^2 = 1 through the rational points of its waist circle."""
    def both():
        for a, b in unit_circle_points():
            yield ProjLine.through((a, b, 0), (-b, a, 1))
            yield ProjLine.through((a, b, 0), (b, -a, 1))
    return _take(both(), count)


def whitney_umbrella_lines(count):
    """The double line x = y = 0 and the lines (u, uv, v^2) for fixed v."""
    lines = [ProjLine.through((0, 0, 0), (0, 0, 1))]
    for v in small_integers():
        if len(lines) >= count:
            break
        lines.append(ProjLine.through((0, 0, v * v), (1, v, 0)))
    return lines[:count]


def fermat_cubic_lines(count):
    lines = [
        ProjLine.through((0, 0, 1), (1, -1, 0)),
        ProjLine.through((0, 1, 0), (1, 0, -1)),
        ProjLine.through((1, 0, 0), (0, 1, -1)),
    ]
    return lines[:count]


def xyz_variety_lines(count):
    """The three axis-parallel line families through (a, b, c, abc), a, b, c >= 1."""
    def families():
        for k in itertools.count(2):
            for b, c in itertools.product(range(1, k), repeat=2):
                if max(b, c) != k - 1:
                    continue
                yield ProjLine.through((0, b, c, 0), (1, 0, 0, b * c))
                yield ProjLine.through((b, 0, c, 0), (0, 1, 0, b * c))
                yield ProjLine.through((b, c, 0, 0), (0, 0, 1, b * c))
    return _take(families(), count)


def no_lines(count):
    return []


@dataclass
class SurfaceCatalogEntry:
    name: str
    text: str
    lines: object
    family: object = None
    meta: dict = field(default_factory=dict)
    description: str = ""

    @property
    def polynomial(self):
        return parse_poly(self.text)

    @property
    def degree(self):
        return self.polynomial.degree()

    def component_meta(self):
        meta = dict(self.meta, name=self.name)
        if self.family is not None:
            meta["generators"] = self.family(self.polynomial)
        return meta

    def surface(self):
        return SurfaceModel.build(self.polynomial, meta=[self.component_meta()])

    def apex(self):
        return self.meta.get("cone_apex")


ORIGIN = AffPoint((0, 0, 0))

CATALOG = {
    e.name: e for e in (
        SurfaceCatalogEntry("regulus", "z - x*y", regulus_lines, RegulusFamily,
                            {"is_regulus": True, "ruled": True}, "hyperbolic paraboloid"),
        SurfaceCatalogEntry("parabolic-cylinder", "y - x^2", parabolic_cylinder_lines, CylinderFamily,
                            {"is_regulus": False, "ruled": True}),
        SurfaceCatalogEntry("cone", "x^2 + y^2 - z^2", cone_lines, lambda f: ConeFamily(f, ORIGIN),
                            {"is_regulus": False, "ruled": True, "cone_apex": ORIGIN}),
        SurfaceCatalogEntry("hyperboloid", "x^2 + y^2 - z^2 - 1", hyperboloid_lines, RegulusFamily,
                            {"is_regulus": True, "ruled": True}, "hyperboloid of one sheet"),
        SurfaceCatalogEntry("sphere", "x^2 + y^2 + z^2 - 1", no_lines, None,
                            {"is_regulus": False, "ruled": True}, "ruled by complex lines only"),
        SurfaceCatalogEntry("whitney-umbrella", "x^2*z - y^2", whitney_umbrella_lines, None,
                            {"is_regulus": False, "ruled": True}, "ruled cubic with a double line"),
        SurfaceCatalogEntry("fermat-cubic", "x^3 + y^3 + z^3 - 1", fermat_cubic_lines, None,
                            {"is_regulus": False, "ruled": False}),
        SurfaceCatalogEntry("xyz-variety", "w - x*y*z", xyz_variety_lines, None,
                            {"ruled": True}, "degree 3 in four variables"),
    )
}


def catalog_entry(name):
    try:
        return CATALOG[name]
    except KeyError:
        raise GeneratorError(f"Unknown surface: {name} (known: {', '.join(CATALOG)})") from None
