# -*- coding: utf-8 -*-
"""
Famiglie di configurazioni con verità nota.

Ogni generatore costruisce punti e rette in aritmetica esatta, marca come
contenute nella superficie tutte le rette (Config lo verifica a ogni
costruzione) e, dove il numero di incidenze è noto a priori, lo confronta
con il conteggio esatto.
"""

import itertools
import logging
from dataclasses import asdict, dataclass
from enum import Enum

import numpy as np

from lib.geometry import AffPoint, ProjLine, line_intersection
from lib.incidence import Config, count_incidences
from lib.lab.catalog import (
    CATALOG,
    ORIGIN,
    GeneratorError,
    cone_lines,
    parabolic_cylinder_lines,
)
from lib.surfaces import ComponentMeta, SurfaceModel

logger = logging.getLogger(__name__)

MAX_POINTS = 100_000
MAX_LINES = 20_000


class Family(Enum):
    REGULUS_GRID = "regulus-grid"
    PARABOLIC_CYLINDER = "parabolic-cylinder"
    CONE_PYTHAGOREAN = "cone-pythagorean"
    PLANE_GRID_ELEKES = "elekes"
    PRODUCT_SURFACE = "product-surface"
    VARIETY_4D_XYZ = "variety-4d"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        for f in cls:
            if value in (f.value, f.name, f.name.lower()):
                return f
        raise GeneratorError(f"Unknown family: {value} (known: {', '.join(f.value for f in cls)})")


@dataclass(frozen=True)
class GeneratorSpec:
    family: Family
    g: int = None
    n: int = None
    m: int = None
    a: int = None
    b: int = None
    seed: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))
        for name in ("g", "n", "m", "a", "b"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise GeneratorError(f"{name} must be positive (got {value})")

    @classmethod
    def for_size(cls, family, size, seed=1):
        """The spec a scaling run uses for one size."""
        family = Family.parse(family)
        if family in (Family.REGULUS_GRID, Family.VARIETY_4D_XYZ):
            return cls(family, g=size, seed=seed)
        if family is Family.PLANE_GRID_ELEKES:
            return cls(family, a=size, b=size, seed=seed)
        return cls(family, n=size, seed=seed)

    @property
    def size(self):
        return self.g or self.a or self.n

    def to_json(self):
        data = {k: v for k, v in asdict(self).items() if v is not None}
        data["family"] = self.family.value
        return data

    @classmethod
    def from_json(cls, data):
        return cls(**data)


def _require(spec, *names):
    missing = [n for n in names if getattr(spec, n) is None]
    if missing:
        raise GeneratorError(f"{spec.family.value} needs {', '.join(missing)}")


def _guard(m, n):
    if m > MAX_POINTS or n > MAX_LINES:
        raise GeneratorError(f"requested m={m}, n={n} exceeds the limits ({MAX_POINTS} points, {MAX_LINES} lines)")


def _sample_on_lines(lines, count, rng, exclude=()):
    """`count` distinct points with integer parameter on randomly chosen lines."""
    height = max(count, 10)
    _guard(count, len(lines))
    seen = set(exclude)
    points = []
    while len(points) < count:
        line = lines[int(rng.integers(len(lines)))]
        p = line.point_at(int(rng.integers(-height, height + 1)))
        if p not in seen:
            seen.add(p)
            points.append(p)
    return points


def regulus_grid(spec):
    _require(spec, "g")
    g = spec.g
    _guard(g * g, 2 * g)
    lines = [ProjLine.through((a, 0, 0), (0, 1, a)) for a in range(g)]
    lines += [ProjLine.through((0, b, 0), (1, 0, b)) for b in range(g)]
    points = [AffPoint((a, b, a * b)) for a in range(g) for b in range(g)]
    return _build(spec, 3, points, lines, CATALOG["regulus"].surface(), expected=2 * g * g)


def parabolic_cylinder(spec):
    _require(spec, "n")
    n = spec.n
    m = spec.m or 2 * n
    _guard(m, n)
    lines = parabolic_cylinder_lines(n)
    points = _sample_on_lines(lines, m, np.random.default_rng(spec.seed))
    # generatrici parallele: ogni punto sta su una sola di esse
    return _build(spec, 3, points, lines, CATALOG["parabolic-cylinder"].surface(), expected=m)


def cone_pythagorean(spec):
    _require(spec, "n")
    n = spec.n
    m = spec.m or 3 * n + 1
    _guard(m, n)
    lines = cone_lines(n)
    points = [ORIGIN] + _sample_on_lines(lines, m - 1, np.random.default_rng(spec.seed), exclude=[ORIGIN])
    return _build(spec, 3, points, lines, CATALOG["cone"].surface(), expected=n + m - 1)


def plane_grid_elekes(spec):
    """Points {1..a} x {1..2ab}, lines y = cx + d with c in {1..b}, d in {1..ab}."""
    _require(spec, "a", "b")
    a, b = spec.a, spec.b
    _guard(2 * a * a * b, a * b * b)
    points = [AffPoint((x, y)) for x in range(1, a + 1) for y in range(1, 2 * a * b + 1)]
    lines = [ProjLine.through((0, d), (1, c)) for c in range(1, b + 1) for d in range(1, a * b + 1)]
    return _build(spec, 2, points, lines, None, expected=a * a * b * b)


def product_surface(spec):
    """
    Parabolic cylinder y = x^2 times the cone x^2 + y^2 = z^2: rulings of
    both, their pairwise meeting points, the apex and random samples.
    """
    _require(spec, "n")
    n = spec.n
    if n < 2:
        raise GeneratorError("product-surface needs at least two lines")
    lines = parabolic_cylinder_lines(n // 2) + cone_lines(n - n // 2)
    meets = []
    seen = {ORIGIN}
    for l1, l2 in itertools.combinations(lines, 2):
        p = line_intersection(l1, l2)
        if p is not None and p not in seen:
            seen.add(p)
            meets.append(p)
    samples = spec.m if spec.m is not None else n
    points = [ORIGIN] + meets + _sample_on_lines(lines, samples, np.random.default_rng(spec.seed), exclude=seen)
    cylinder, cone = CATALOG["parabolic-cylinder"], CATALOG["cone"]
    components = [ComponentMeta(cylinder.polynomial, **cylinder.component_meta()),
                  ComponentMeta(cone.polynomial, **cone.component_meta())]
    surface = SurfaceModel(cylinder.polynomial * cone.polynomial, components)
    return _build(spec, 3, points, lines, surface)


def variety_4d(spec):
    """Grid (a, b, c, abc), a, b, c in {1..g}, on Z(w - xyz) with its three axis-parallel line families."""
    _require(spec, "g")
    g = spec.g
    _guard(g ** 3, 3 * g * g)
    values = range(1, g + 1)
    points = [AffPoint((a, b, c, a * b * c)) for a, b, c in itertools.product(values, repeat=3)]
    lines = []
    for u, v in itertools.product(values, repeat=2):
        lines.append(ProjLine.through((0, u, v, 0), (1, 0, 0, u * v)))
        lines.append(ProjLine.through((u, 0, v, 0), (0, 1, 0, u * v)))
        lines.append(ProjLine.through((u, v, 0, 0), (0, 0, 1, u * v)))
    return _build(spec, 4, points, lines, CATALOG["xyz-variety"].surface(), expected=3 * g ** 3)


def _build(spec, dim, points, lines, surface, expected=None):
    contained = (True,) * len(lines) if surface is not None else None
    config = Config(dim, tuple(points), tuple(lines), surface, contained, name=f"{spec.family.value}-{spec.size}")
    if expected is not None:
        actual = count_incidences(config)
        if actual != expected:
            raise ArithmeticError(f"{config.name}: {actual} incidences, ground truth {expected}")
    logger.info(f"Generated {config.name}: m={config.m}, n={config.n}")
    return config


GENERATORS = {
    Family.REGULUS_GRID: regulus_grid,
    Family.PARABOLIC_CYLINDER: parabolic_cylinder,
    Family.CONE_PYTHAGOREAN: cone_pythagorean,
    Family.PLANE_GRID_ELEKES: plane_grid_elekes,
    Family.PRODUCT_SURFACE: product_surface,
    Family.VARIETY_4D_XYZ: variety_4d,
}


def gen(spec):
    return GENERATORS[spec.family](spec)
