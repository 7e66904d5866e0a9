import itertools
from fractions import Fraction

import pytest

from lib.geometry import AffPoint, ProjLine
from lib.polycore import parse_poly as P
from lib.surfaces import (
    ComponentMeta,
    ConeFamily,
    CylinderFamily,
    DegenerateQuadricError,
    FactorMismatchError,
    NotOnSurfaceError,
    QuadricType,
    RegulusFamily,
    SingularPointError,
    SurfaceError,
    SurfaceModel,
    as_plane,
    classify_quadric,
    contains_line,
    intersection_multiplicities,
    is_flat_line,
    is_flat_point,
    is_linearly_flat,
    is_singular_line,
    is_singular_point,
    line_curve_intersection_multiplicity,
    multiplicity_at,
    regulus_through,
    tangent_cone,
    tangent_plane,
)

ORIGIN = AffPoint((0, 0, 0))
CONE = P("x^2 + y^2 - z^2")
REGULUS = P("z - x*y")
CYLINDER = P("y - x^2")


def ruling(a):
    """The line x = a of z = xy."""
    return ProjLine.through((a, 0, 0), (0, 1, a))


def test_containment():
    assert contains_line(REGULUS, ruling(3))
    assert contains_line(CONE, ProjLine.through(ORIGIN, (3, 4, 5)))
    assert not contains_line(CONE, ProjLine.through(ORIGIN, (1, 1, 1)))


def test_singularity_and_multiplicity():
    assert is_singular_point(CONE, ORIGIN)
    assert not is_singular_point(CONE, AffPoint((3, 4, 5)))
    assert multiplicity_at(CONE, ORIGIN) == 2
    assert multiplicity_at(CONE, AffPoint((3, 4, 5))) == 1
    assert tangent_cone(CONE, ORIGIN) == CONE
    with pytest.raises(NotOnSurfaceError):
        is_singular_point(CONE, AffPoint((1, 0, 0)))


def test_tangent_plane_contains_both_rulings():
    p = AffPoint((1, 2, 2))
    plane = tangent_plane(REGULUS, p)
    assert plane.contains(p)
    for direction in ((1, 0, 2), (0, 1, 1)):
        assert plane.contains(ProjLine.through(p, direction).point_at(5))
    with pytest.raises(SingularPointError):
        tangent_plane(CONE, ORIGIN)


def test_flat_points():
    assert is_flat_point(P("x + y + z - 1"), AffPoint((1, 0, 0)))
    assert is_flat_point(P("z - x^3"), ORIGIN)
    assert not is_flat_point(REGULUS, ORIGIN)
    assert not is_flat_point(CYLINDER, ORIGIN)


def test_flat_and_singular_lines():
    y_axis = ProjLine.through(ORIGIN, (0, 1, 0))
    assert is_flat_line(P("z"), ProjLine.through(ORIGIN, (1, 0, 0)))
    assert is_flat_line(P("z - x^3"), y_axis)
    assert not is_flat_line(REGULUS, y_axis)
    umbrella = P("x^2*z - y^2")
    z_axis = ProjLine.through(ORIGIN, (0, 0, 1))
    assert is_singular_line(umbrella, z_axis)
    assert not is_flat_line(umbrella, z_axis)
    assert not is_singular_line(REGULUS, y_axis)


def test_linearly_flat_points():
    plane = P("z")
    lines = [ProjLine.through(ORIGIN, d) for d in ((1, 0, 0), (0, 1, 0), (1, 1, 0))]
    assert is_linearly_flat(plane, ORIGIN, lines)
    assert not is_linearly_flat(plane, ORIGIN, lines[:2])
    assert not is_linearly_flat(CONE, ORIGIN, [ProjLine.through(ORIGIN, t) for t in ((3, 4, 5), (4, 3, 5), (5, 12, 13))])


def test_plane_curve_multiplicities():
    parabola = P("y - x^2")
    x_axis = ProjLine.through((0, 0), (1, 0))
    assert line_curve_intersection_multiplicity(parabola, x_axis, AffPoint((0, 0))) == 2
    chord = ProjLine.through((0, 1), (1, 0))
    assert intersection_multiplicities(parabola, chord) == {AffPoint((-1, 1)): 1, AffPoint((1, 1)): 1}
    with pytest.raises(SurfaceError):
        intersection_multiplicities(P("y"), x_axis)


def test_as_plane():
    assert as_plane(P("x + 2*y - 3")).coeffs == (-3, 1, 2, 0)
    with pytest.raises(SurfaceError):
        as_plane(CONE)


@pytest.mark.parametrize("text, kind", [
    ("x^2 + y^2 + z^2 - 1", QuadricType.NO_REAL_LINES),
    ("z - x*y", QuadricType.REGULUS),
    ("x^2 + y^2 - z^2 - 1", QuadricType.REGULUS),
    ("y - x^2", QuadricType.NON_REGULUS_RULED),
    ("x^2 + y^2 - z^2", QuadricType.CONE),
    ("x^2 + y^2 + z^2", QuadricType.NO_REAL_LINES),
    ("x^2 - y^2", QuadricType.PLANE_PAIR),
    ("x^2 + y^2", QuadricType.PLANE_PAIR),
    ("x^2 + 1", QuadricType.NO_REAL_LINES),
    ("x^2 + y^2 + 1", QuadricType.NO_REAL_LINES),
])
def test_quadric_classification(text, kind):
    assert classify_quadric(P(text)).kind is kind


def test_plane_pairs_report_whether_the_planes_are_real():
    real = classify_quadric(P("x^2 - y^2"))
    assert real.real and real.to_json()["real"] is True
    imaginary = classify_quadric(P("x^2 + y^2"))
    assert imaginary.kind is QuadricType.PLANE_PAIR
    assert imaginary.real is False
    assert imaginary.to_json()["real"] is False
    assert classify_quadric(P("z - x*y")).real


def test_cone_classification_reports_apex():
    result = classify_quadric(P("(x - 1)^2 + y^2 - (z + 2)^2"))
    assert result.kind is QuadricType.CONE
    assert result.apex == AffPoint((1, 0, -2))
    assert result.signature == (2, 1)


def test_degenerate_quadrics():
    with pytest.raises(DegenerateQuadricError):
        classify_quadric(P("x^2"))
    with pytest.raises(SurfaceError):
        classify_quadric(P("x^3 - y"))


def test_regulus_reconstruction_is_permutation_invariant():
    lines = [ruling(0), ruling(1), ruling(2)]
    expected = P("x*y - z")
    for order in itertools.permutations(lines):
        q = regulus_through(*order)
        assert q == expected
        assert q.same_up_to_scalar(REGULUS)


def test_regulus_through_rejects_coplanar_lines():
    with pytest.raises(SurfaceError):
        regulus_through(ruling(0), ProjLine.through((0, 5, 0), (1, 0, 0)), ruling(2))


def test_cylinder_family():
    family = CylinderFamily(CYLINDER)
    assert family.lambda_at(AffPoint((1, 1, 5))) == 1
    assert family.lambda_at(AffPoint((1, 0, 0))) == 0
    assert family.is_generator(ProjLine.through((2, 4, 0), (0, 0, 1)))
    assert family.lambda_sum_on(ProjLine.through((0, 1, 0), (1, 0, 0))) == 2
    assert family.lambda_sum_on(ProjLine.through(ORIGIN, (1, 0, 0))) == 1
    assert family.generators_through(AffPoint((1, 1, 7))) == [ProjLine.through((1, 1, 0), (0, 0, 1))]
    with pytest.raises(SurfaceError):
        CylinderFamily(REGULUS)


def test_cone_family_counts_the_apex_as_zero():
    family = ConeFamily(CONE, ORIGIN)
    line = ProjLine.through(ORIGIN, (3, 4, 5))
    assert family.lambda_at(ORIGIN) == 0
    assert family.lambda_at(AffPoint((3, 4, 5))) == 1
    assert family.lambda_sum_on(ProjLine.through(ORIGIN, (1, 0, 0))) == 0
    assert family.lambda_sum_on(line) == 0
    assert family.is_generator(line)
    points = [ORIGIN, AffPoint((3, 4, 5)), AffPoint((6, 8, 10)), AffPoint((1, 0, 0))]
    crossing = family.crossing_generators(line, points)
    assert set(crossing) == set(points[:3])
    assert all(g == [] for g in crossing.values())
    with pytest.raises(SurfaceError):
        family.crossing_generators(ProjLine.through(ORIGIN, (1, 1, 1)), points)
    with pytest.raises(SurfaceError):
        ConeFamily(CONE, (1, 1, 1))


def test_regulus_family_generators_through_a_point():
    family = RegulusFamily(REGULUS)
    p = AffPoint((1, 2, 2))
    assert set(family.generators_through(p)) == {ProjLine.through(p, (1, 0, 2)), ProjLine.through(p, (0, 1, 1))}
    assert family.lambda_sum_on(ruling(4)) is None
    crossing = family.crossing_generators(ruling(1), [p, AffPoint((1, 0, 0))])
    assert crossing[p] == [ProjLine.through(p, (1, 0, 2))]


def test_hyperboloid_rulings_and_the_sphere():
    hyperboloid = RegulusFamily(P("x^2 + y^2 - z^2 - 1"))
    p = AffPoint((1, 0, 0))
    lines = hyperboloid.generators_through(p)
    assert {l.direction for l in lines} == {(0, 1, 1), (0, 1, -1)}
    assert all(contains_line(hyperboloid.factor, l) for l in lines)
    with pytest.raises(SurfaceError):
        RegulusFamily(P("x^2 + y^2 + z^2 - 1")).generators_through(p)


def test_component_meta():
    cone = ComponentMeta(CONE, generators=ConeFamily(CONE, ORIGIN))
    assert cone.cone_apex == ORIGIN
    assert cone.singly_ruled
    assert not ComponentMeta(REGULUS, generators=RegulusFamily(REGULUS)).singly_ruled
    plane = ComponentMeta(P("x + y"))
    assert plane.is_plane and plane.ruled
    with pytest.raises(SurfaceError):
        ComponentMeta(P("x + y"), is_plane=False)


def test_surface_model_checks():
    model = SurfaceModel.build("z - x*y")
    assert model.dim == 3 and model.degree == 2 and len(model.components) == 1
    with pytest.raises(FactorMismatchError):
        SurfaceModel.build("x*y", factors=["x", "y + 1"])
    with pytest.raises(SurfaceError):
        SurfaceModel.build("x^2*y")
    with pytest.raises(SurfaceError):
        SurfaceModel.build("x^2 + y^2 - z^2", meta=[{"cone_apex": AffPoint((3, 4, 5))}])
    assert SurfaceModel.build("w - x*y*z").dim == 4


def test_surface_model_json_round_trip():
    model = SurfaceModel(CYLINDER * CONE, [
        ComponentMeta(CYLINDER, name="cylinder", generators=CylinderFamily(CYLINDER)),
        ComponentMeta(CONE, name="cone", generators=ConeFamily(CONE, ORIGIN)),
    ])
    again = SurfaceModel.from_json(model.to_json())
    assert again.f == model.f
    assert again.to_json() == model.to_json()
    assert again.components[1].cone_apex == ORIGIN
    assert isinstance(again.components[0].generators, CylinderFamily)
    assert again.cone_apexes() == [(1, ORIGIN)]
    assert not again.has_plane_or_regulus()
    assert Fraction(again.degree) == 4
