# -*- coding: utf-8 -*-
"""Geometria esatta di punti, rette e piani, affine e proiettiva."""

from lib.geometry.linalg import nullspace, rank, rref
from lib.geometry.primitives import (
    AffPoint,
    Flat2,
    GeometryError,
    HyperplaneH,
    IdenticalLinesError,
    IdenticalPointsError,
    LineInPlaneError,
    ProjectivePoint,
    ProjLine,
    SkewLinesError,
    hyperplane_through,
    klein_form,
    line_from_plucker,
    line_from_points,
    line_intersection,
    line_plane_intersection,
    lines_all_coplanar,
    lines_coplanar,
    plucker_coordinates,
    point_on_line,
    span_2flat,
    whole_plane,
)
from lib.geometry.projection import ProjectionError, ProjectionReport, project_generic
