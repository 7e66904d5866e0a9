# -*- coding: utf-8 -*-
"""
SurfaceModel: un polinomio libero da quadrati con i suoi fattori
irriducibili (dichiarati dal chiamante) e i metadati di ogni componente.
"""

import logging
from dataclasses import dataclass, field

from lib.geometry import AffPoint
from lib.polycore import POINT_VARIABLES, MultiPoly, parse_poly, square_free_part
from lib.polycore.calculus import point_dimension
from lib.polycore.errors import UnknownVariableError
from lib.surfaces.errors import FactorMismatchError, SurfaceError
from lib.surfaces.generators import ConeFamily, family_from_json
from lib.surfaces.local import gradient

logger = logging.getLogger(__name__)


@dataclass
class ComponentMeta:
    factor: MultiPoly
    name: str = ""
    is_plane: bool = None
    cone_apex: AffPoint = None
    is_regulus: bool = None
    ruled: bool = None
    generators: object = None

    def __post_init__(self):
        linear = self.factor.degree() == 1
        if self.is_plane is None:
            self.is_plane = linear
        elif self.is_plane != linear:
            raise SurfaceError(f"component {self.factor}: is_plane={self.is_plane} but degree {self.factor.degree()}")
        if self.is_plane and self.ruled is None:
            self.ruled = True
        if isinstance(self.generators, ConeFamily) and self.cone_apex is None:
            self.cone_apex = self.generators.apex

    @property
    def degree(self):
        return self.factor.degree()

    @property
    def singly_ruled(self):
        return self.generators is not None and not self.generators.doubly_ruled

    def to_json(self):
        return {
            "factor": str(self.factor),
            "name": self.name,
            "is_plane": self.is_plane,
            "cone_apex": self.cone_apex.to_json() if self.cone_apex is not None else None,
            "is_regulus": self.is_regulus,
            "ruled": self.ruled,
            "generators": self.generators.to_json() if self.generators is not None else None,
        }

    @classmethod
    def from_json(cls, data):
        factor = parse_poly(data["factor"])
        apex = data.get("cone_apex")
        return cls(
            factor=factor,
            name=data.get("name", ""),
            is_plane=data.get("is_plane"),
            cone_apex=AffPoint.from_json(apex) if apex is not None else None,
            is_regulus=data.get("is_regulus"),
            ruled=data.get("ruled"),
            generators=family_from_json(factor, data.get("generators")),
        )


@dataclass
class SurfaceModel:
    f: MultiPoly
    components: list = field(default_factory=list)

    def __post_init__(self):
        try:
            self.dim = point_dimension(self.f)
        except UnknownVariableError as exc:
            raise SurfaceError(str(exc)) from None
        self.f = self.f.embed(POINT_VARIABLES[self.dim])
        if not self.components:
            self.components = [ComponentMeta(self.f)]
        product = MultiPoly.constant(1, self.f.variables)
        for c in self.components:
            c.factor = c.factor.embed(POINT_VARIABLES[self.dim])
            product = product * c.factor
        if not product.same_up_to_scalar(self.f):
            raise FactorMismatchError(f"factors {[str(c.factor) for c in self.components]} do not multiply to {self.f}")
        for c in self.components:
            if c.cone_apex is not None:
                self._check_apex(c)

    @classmethod
    def build(cls, f, factors=None, meta=None, check_square_free=True):
        """SurfaceModel from a polynomial, its factors and one dict of ComponentMeta fields per factor."""
        if isinstance(f, str):
            f = parse_poly(f)
        if check_square_free and square_free_part(f).degree() != f.degree():
            raise SurfaceError(f"{f} is not square-free")
        factors = [parse_poly(q) if isinstance(q, str) else q for q in (factors or [f])]
        meta = meta or [{}] * len(factors)
        components = [ComponentMeta(q, **m) for q, m in zip(factors, meta)]
        return cls(f, components)

    def _check_apex(self, component):
        apex = component.cone_apex
        if component.factor.eval(apex.coords) != 0:
            raise SurfaceError(f"cone apex {apex} is not on {component.factor}")
        if any(gradient(component.factor, apex)):
            raise SurfaceError(f"cone apex {apex} is not a singular point of {component.factor}")

    @property
    def factors(self):
        return [c.factor for c in self.components]

    @property
    def degree(self):
        return self.f.degree()

    def has_plane_or_regulus(self):
        return any(c.is_plane or c.is_regulus for c in self.components)

    def cone_apexes(self):
        return [(i, c.cone_apex) for i, c in enumerate(self.components) if c.cone_apex is not None]

    def to_json(self):
        return {"f": str(self.f), "components": [c.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, data):
        return cls(parse_poly(data["f"]), [ComponentMeta.from_json(c) for c in data.get("components", [])])
