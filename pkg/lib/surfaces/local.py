# -*- coding: utf-8 -*-
"""Analisi locale nei punti e lungo le rette: singolarità, molteplicità, planarità."""

from fractions import Fraction

from lib.geometry import HyperplaneH, hyperplane_through, nullspace, point_on_line
from lib.polycore import POINT_VARIABLES, MultiPoly, line_coefficients, order_at_zero, taylor_components
from lib.polycore.univariate import rational_roots
from lib.surfaces.errors import NotOnSurfaceError, SingularPointError, SurfaceError


def _in_point_variables(f, dim):
    return f.embed(POINT_VARIABLES[dim])


def _require_on(f, p):
    f = _in_point_variables(f, p.dim)
    if f.eval(p.coords) != 0:
        raise NotOnSurfaceError(f"{p} is not on Z({f})")
    return f


def contains_line(f, line):
    """True iff f vanishes identically on the line."""
    f = _in_point_variables(f, line.dim)
    return all(c == 0 for c in line_coefficients(f, line.base.coords, line.direction))


def gradient(f, p):
    f = _in_point_variables(f, p.dim)
    return tuple(f.partial_derivative(v).eval(p.coords) for v in f.variables)


def is_singular_point(f, p):
    f = _require_on(f, p)
    return not any(gradient(f, p))


def multiplicity_at(f, p):
    f = _require_on(f, p)
    return order_at_zero([0 if c.is_zero() else 1 for c in taylor_components(f, p.coords)])


def tangent_cone(f, p):
    """Lowest nonzero homogeneous component of f(p + x)."""
    f = _require_on(f, p)
    return next(c for c in taylor_components(f, p.coords) if not c.is_zero())


def tangent_plane(f, p):
    f = _require_on(f, p)
    grad = gradient(f, p)
    if not any(grad):
        raise SingularPointError(f"{p} is a singular point of Z({f})")
    return hyperplane_through(p, grad)


def _quadratic_part(f, p):
    components = taylor_components(f, p.coords)
    return components[2] if len(components) > 2 else MultiPoly.zero(f.variables)


def is_flat_point(f, p):
    """
    f2 vanishes on the tangent plane at p.

    A quadratic form on a space with basis b_1..b_k is zero iff it
    vanishes at every b_i and every b_i + b_j.
    """
    plane = tangent_plane(f, p)
    f = _in_point_variables(f, p.dim)
    f2 = _quadratic_part(f, p)
    if f2.is_zero():
        return True
    basis = nullspace([plane.normal])
    probes = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            probes.append(tuple(a + b for a, b in zip(basis[i], basis[j])))
    return all(f2.eval(v) == 0 for v in probes)


def is_singular_line(f, line):
    f = _in_point_variables(f, line.dim)
    return contains_line(f, line) and all(contains_line(f.partial_derivative(v), line) for v in f.variables)


def _line_points(line):
    k = 0
    while True:
        yield line.point_at(k)
        k = -k if k > 0 else 1 - k


def is_flat_line(f, line):
    """
    Every non-singular point of the contained line is flat.

    Along the line the flatness conditions are polynomials of degree at
    most 3D - 4, so 3D - 3 non-singular flat points decide it.
    """
    f = _in_point_variables(f, line.dim)
    if not contains_line(f, line) or is_singular_line(f, line):
        return False
    needed = max(3 * f.degree() - 3, 1)
    checked = 0
    for p in _line_points(line):
        if not any(gradient(f, p)):
            continue
        if not is_flat_point(f, p):
            return False
        checked += 1
        if checked == needed:
            return True


def is_linearly_flat(f, p, lines):
    """Non-singular p incident to at least three lines contained in Z(f)."""
    f = _require_on(f, p)
    if not any(gradient(f, p)):
        return False
    through = [l for l in lines if point_on_line(p, l) and contains_line(f, l)]
    return len(through) >= 3


def line_curve_intersection_multiplicity(f, line, p):
    """Order of vanishing of t -> f(p + t*direction) at t = 0, for a plane curve f."""
    if line.dim != 2:
        raise SurfaceError("intersection multiplicity is defined here for plane curves")
    if not point_on_line(p, line):
        raise SurfaceError(f"{p} is not on {line}")
    f = _require_on(f, p)
    coeffs = line_coefficients(f, p.coords, line.direction)
    order = order_at_zero(coeffs)
    if order is None:
        raise SurfaceError(f"line {line} is contained in the curve")
    return order


def intersection_multiplicities(f, line):
    """{point: multiplicity} over the rational points of the line on the curve."""
    f = _in_point_variables(f, line.dim)
    coeffs = line_coefficients(f, line.base.coords, line.direction)
    if all(c == 0 for c in coeffs):
        raise SurfaceError(f"line {line} is contained in the curve")
    if len(coeffs) == 1:
        return {}
    return {line.point_at(r): line_curve_intersection_multiplicity(f, line, line.point_at(r))
            for r in rational_roots(coeffs)}


def as_plane(factor):
    """HyperplaneH of a degree-1 polynomial."""
    if factor.degree() != 1:
        raise SurfaceError(f"{factor} is not linear")
    dim = 3 if set(factor.variables) <= set(POINT_VARIABLES[3]) else 4
    f = _in_point_variables(factor, dim)
    zero = (Fraction(0),) * dim
    coeffs = [f.eval(zero)] + [f.partial_derivative(v).eval(zero) for v in f.variables]
    return HyperplaneH.from_coeffs(coeffs)
