# -*- coding: utf-8 -*-
"""Analisi locale delle superfici algebriche e quadriche rigate."""

from lib.surfaces.errors import (
    DegenerateQuadricError,
    FactorMismatchError,
    NotOnSurfaceError,
    SingularPointError,
    SurfaceError,
)
from lib.surfaces.generators import ConeFamily, CylinderFamily, GeneratorFamily, RegulusFamily, family_from_json
from lib.surfaces.local import (
    as_plane,
    contains_line,
    gradient,
    intersection_multiplicities,
    is_flat_line,
    is_flat_point,
    is_linearly_flat,
    is_singular_line,
    is_singular_point,
    line_curve_intersection_multiplicity,
    multiplicity_at,
    tangent_cone,
    tangent_plane,
)
from lib.surfaces.model import ComponentMeta, SurfaceModel
from lib.surfaces.quadrics import (
    QuadricClassification,
    QuadricType,
    classify_quadric,
    congruence_diagonal,
    quadric_matrix,
    regulus_through,
)
