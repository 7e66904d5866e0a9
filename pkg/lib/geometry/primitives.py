# -*- coding: utf-8 -*-
"""
Punti, rette, 2-piani e iperpiani esatti nello spazio affine di dimensione d.

Ogni oggetto è in forma canonica già alla costruzione, così l'uguaglianza
dei dataclass è l'uguaglianza geometrica e gli oggetti possono fare da
chiave nei dizionari (deduplicazione di punti, rette e piani).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from lib.geometry import linalg


class GeometryError(ValueError):
    """Invalid geometric input."""


class IdenticalPointsError(GeometryError):
    pass


class IdenticalLinesError(GeometryError):
    pass


class SkewLinesError(GeometryError):
    pass


class LineInPlaneError(GeometryError):
    """The line lies in the plane: the intersection is the whole line."""


def _fractions(values):
    out = []
    for v in values:
        if isinstance(v, float):
            raise TypeError("floating-point coordinates are not accepted")
        out.append(v if isinstance(v, Fraction) else Fraction(v))
    return tuple(out)


def _to_json(values):
    return [str(v) for v in values]


@dataclass(frozen=True)
class AffPoint:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", _fractions(self.coords))

    @property
    def dim(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def to_json(self):
        return _to_json(self.coords)

    @classmethod
    def from_json(cls, data):
        return cls(tuple(Fraction(str(v)) for v in data))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _canonical_direction(direction):
    direction = _fractions(direction)
    lead = next((v for v in direction if v != 0), None)
    if lead is None:
        raise GeometryError("zero direction vector")
    return tuple(v / lead for v in direction)


@dataclass(frozen=True)
class ProjLine:
    """Line as canonical (base, direction), plus Plücker coordinates when d = 3."""

    base: AffPoint
    direction: tuple
    plucker: tuple = field(default=None, compare=False)

    @classmethod
    def through(cls, base, direction):
        base = base if isinstance(base, AffPoint) else AffPoint(tuple(base))
        direction = _canonical_direction(direction)
        if len(direction) != base.dim:
            raise GeometryError(f"direction of length {len(direction)} for a point of dimension {base.dim}")
        i = next(k for k, v in enumerate(direction) if v != 0)
        reduced = AffPoint(linalg.sub(base.coords, linalg.scale(direction, base[i])))
        plucker = None
        if base.dim == 3:
            plucker = _plucker_from_points(reduced.coords, linalg.add(reduced.coords, direction))
            expected = direction + linalg.cross(reduced.coords, direction)
            if plucker != expected:
                raise ArithmeticError("Plücker tuple disagrees with (base, direction)")
            if klein_form(plucker) != 0:
                raise ArithmeticError("Plücker tuple off the Klein quadric")
        return cls(reduced, direction, plucker)

    @property
    def dim(self):
        return self.base.dim

    def point_at(self, t):
        return AffPoint(linalg.add(self.base.coords, linalg.scale(self.direction, Fraction(t))))

    def to_json(self):
        return {"base": self.base.to_json(), "direction": _to_json(self.direction)}

    @classmethod
    def from_json(cls, data):
        return cls.through(AffPoint.from_json(data["base"]), [Fraction(str(v)) for v in data["direction"]])

    def __str__(self):
        return f"{self.base} + t*(" + ", ".join(str(c) for c in self.direction) + ")"


@dataclass(frozen=True)
class Flat2:
    base: AffPoint
    span: tuple

    def contains_point(self, p):
        return linalg.rank(list(self.span) + [linalg.sub(p.coords, self.base.coords)]) == 2

    def contains_line(self, line):
        return (self.contains_point(line.base)
                and linalg.rank(list(self.span) + [line.direction]) == 2)


@dataclass(frozen=True)
class HyperplaneH:
    """A0 + A1*x1 + ... + Ad*xd = 0, scaled so the first nonzero Ai (i >= 1) is 1."""

    coeffs: tuple

    @classmethod
    def from_coeffs(cls, coeffs):
        coeffs = _fractions(coeffs)
        lead = next((v for v in coeffs[1:] if v != 0), None)
        if lead is None:
            raise GeometryError("hyperplane with A1..Ad all zero")
        return cls(tuple(v / lead for v in coeffs))

    @property
    def dim(self):
        return len(self.coeffs) - 1

    @property
    def normal(self):
        return self.coeffs[1:]

    def value_at(self, p):
        return self.coeffs[0] + linalg.dot(self.coeffs[1:], p.coords)

    def contains(self, p):
        return self.value_at(p) == 0


@dataclass(frozen=True)
class ProjectivePoint:
    """Homogeneous (x0 : x1 : ... : xd); x0 = 0 is a point at infinity."""

    coords: tuple

    @classmethod
    def from_coords(cls, coords):
        coords = _fractions(coords)
        lead = coords[0] if coords[0] != 0 else next((v for v in coords if v != 0), None)
        if lead is None:
            raise GeometryError("all homogeneous coordinates are zero")
        return cls(tuple(v / lead for v in coords))

    def is_finite(self):
        return self.coords[0] != 0

    def affine(self):
        return AffPoint(self.coords[1:]) if self.is_finite() else None


def hyperplane_through(point, normal):
    normal = _fractions(normal)
    return HyperplaneH.from_coeffs((-linalg.dot(normal, point.coords),) + normal)


def _check_dims(*objects):
    dims = {o.dim for o in objects}
    if len(dims) != 1:
        raise GeometryError(f"mixed dimensions {sorted(dims)}")


def _plucker_from_points(x, y):
    """pi_ij = x_i y_j - x_j y_i of the homogeneous points (1, x), (1, y)."""
    hx = (Fraction(1),) + tuple(x)
    hy = (Fraction(1),) + tuple(y)

    def pi(i, j):
        return hx[i] * hy[j] - hx[j] * hy[i]

    return (pi(0, 1), pi(0, 2), pi(0, 3), pi(2, 3), pi(3, 1), pi(1, 2))


def klein_form(pi):
    return pi[0] * pi[3] + pi[1] * pi[4] + pi[2] * pi[5]


def plucker_coordinates(line):
    if line.dim != 3:
        raise GeometryError("Plücker coordinates need ambient dimension 3")
    return line.plucker


def line_from_plucker(pi):
    """Inverse of plucker_coordinates: d = (pi01, pi02, pi03), m = (pi23, pi31, pi12)."""
    pi = _fractions(pi)
    if klein_form(pi) != 0:
        raise GeometryError("tuple is not on the Klein quadric")
    d, m = pi[:3], pi[3:]
    dd = linalg.dot(d, d)
    if dd == 0:
        raise GeometryError("line at infinity (direction part is zero)")
    base = linalg.scale(linalg.cross(d, m), 1 / dd)
    return ProjLine.through(AffPoint(base), d)


def line_from_points(x, y):
    _check_dims(x, y)
    if x == y:
        raise IdenticalPointsError(f"identical points {x}")
    return ProjLine.through(x, linalg.sub(y.coords, x.coords))


def point_on_line(p, line):
    _check_dims(p, line)
    diff = linalg.sub(p.coords, line.base.coords)
    i = next(k for k, v in enumerate(line.direction) if v != 0)
    t = diff[i]
    return all(a == t * b for a, b in zip(diff, line.direction))


def line_plane_intersection(line, plane):
    """
    Intersezione retta-piano in coordinate omogenee.

    Con d la direzione e m = p x d il momento della retta: il punto è
    (A.d : A x m - A0 d). Risultato verificato contro la soluzione
    parametrica e contro l'appartenenza a retta e piano.
    """
    if line.dim != 3 or plane.dim != 3:
        raise GeometryError("line-plane intersection is implemented in dimension 3")
    d = line.plucker[:3]
    m = line.plucker[3:]
    a0, a = plane.coeffs[0], plane.coeffs[1:]
    w = linalg.dot(a, d)
    xyz = linalg.sub(linalg.cross(a, m), linalg.scale(d, a0))
    if w == 0 and all(v == 0 for v in xyz):
        raise LineInPlaneError(f"line {line} lies in the plane")
    result = ProjectivePoint.from_coords((w,) + xyz)

    if w != 0:
        t = -(a0 + linalg.dot(a, line.base.coords)) / w
        expected = ProjectivePoint.from_coords((Fraction(1),) + line.point_at(t).coords)
    else:
        expected = ProjectivePoint.from_coords((Fraction(0),) + line.direction)
    if result != expected:
        raise ArithmeticError(f"line-plane formula {result} disagrees with parametric solve {expected}")
    if result.is_finite():
        point = result.affine()
        if not (plane.contains(point) and point_on_line(point, line)):
            raise ArithmeticError("intersection point fails the membership re-check")
    return result


def _check_distinct(l1, l2):
    _check_dims(l1, l2)
    if l1 == l2:
        raise IdenticalLinesError(f"identical lines {l1}")


def lines_coplanar(l1, l2):
    _check_distinct(l1, l2)
    diff = linalg.sub(l2.base.coords, l1.base.coords)
    return linalg.rank([l1.direction, l2.direction, diff]) <= 2


def lines_all_coplanar(l1, l2, l3):
    """True if the three lines lie in one 2-flat."""
    _check_dims(l1, l2, l3)
    b = l1.base.coords
    vectors = [l1.direction, l2.direction, l3.direction,
               linalg.sub(l2.base.coords, b), linalg.sub(l3.base.coords, b)]
    return linalg.rank(vectors) <= 2


def _canonical_flat(base, vectors):
    span, pivots = linalg.rref(vectors)
    if len(span) != 2:
        raise GeometryError("span vectors are not independent")
    coords = base.coords
    for row, col in zip(span, pivots):
        coords = linalg.sub(coords, linalg.scale(row, coords[col]))
    return Flat2(AffPoint(coords), tuple(span))


def span_2flat(l1, l2):
    _check_distinct(l1, l2)
    if not lines_coplanar(l1, l2):
        raise SkewLinesError(f"lines {l1} and {l2} are skew")
    second = l2.direction
    if linalg.rank([l1.direction, second]) < 2:
        second = linalg.sub(l2.base.coords, l1.base.coords)
    return _canonical_flat(l1.base, [l1.direction, second])


def whole_plane():
    """The ambient plane as a Flat2 (dimension 2)."""
    return Flat2(AffPoint((0, 0)), ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))))


def line_intersection(l1, l2):
    """Common point of two distinct lines, or None when parallel or skew."""
    _check_distinct(l1, l2)
    if linalg.rank([l1.direction, l2.direction]) < 2:
        return None
    diff = linalg.sub(l2.base.coords, l1.base.coords)
    solution = linalg.solve([l1.direction, linalg.scale(l2.direction, -1)], diff)
    if solution is None:
        return None
    return l1.point_at(solution[0])
