import pytest

from lib.flecnode import (
    FlecnodeError,
    LineSearch,
    Verdict,
    caysala_line_bound,
    cayley_salmon_test,
    flecnode_poly,
    lines_through_point_exist,
    rational_points_on,
    vanishes_on_line,
)
from lib.geometry import AffPoint, ProjLine
from lib.lab import CATALOG
from lib.polycore import parse_poly as P
from lib.surfaces import FactorMismatchError, NotOnSurfaceError, contains_line

FERMAT = P("x^3 + y^3 + z^3 - 1")
UMBRELLA = P("x^2*z - y^2")


@pytest.fixture(scope="module")
def fermat_fl():
    return flecnode_poly(FERMAT)


@pytest.mark.parametrize("text", [
    "x^2 + y^2 + z^2 - 1", "z - x*y", "y - x^2", "x^2 + y^2 - z^2", "x^2 + y^2 - z^2 - 1",
])
def test_flecnode_polynomial_of_a_quadric_is_zero(text):
    result = flecnode_poly(P(text))
    assert result.is_zero()
    assert result.construction_log[-1]["step"] == "G3 is identically zero"


@pytest.mark.parametrize("text, max_degree", [
    ("x + y - z", 6),
    ("x^3 + y^3 + z^3 - 1", 2),
    ("(x - y)^2*z", 6),
    ("w - x*y*z", 6),
])
def test_flecnode_input_errors(text, max_degree):
    with pytest.raises(FlecnodeError):
        flecnode_poly(P(text), max_degree)


def test_fermat_lines_are_flecnodal(fermat_fl):
    assert not fermat_fl.is_zero()
    assert fermat_fl.degree == 3
    assert fermat_fl.true_degree_bound == 9
    for line in CATALOG["fermat-cubic"].lines(3):
        assert contains_line(FERMAT, line)
        assert vanishes_on_line(fermat_fl.fl, line)


def test_umbrella_lines_are_flecnodal():
    fl = flecnode_poly(UMBRELLA).fl
    lines = CATALOG["whitney-umbrella"].lines(100)
    assert len(lines) == 100
    assert all(vanishes_on_line(fl, line) for line in lines)


def test_catalogued_quadric_lines_are_flecnodal():
    for name in ("regulus", "parabolic-cylinder", "cone", "hyperboloid"):
        entry = CATALOG[name]
        fl = flecnode_poly(entry.polynomial).fl
        assert all(vanishes_on_line(fl, line) for line in entry.lines(100))


def test_fermat_cubic_is_not_ruled():
    verdict = cayley_salmon_test(FERMAT, [FERMAT])[0]
    assert verdict.verdict is Verdict.NOT_RULED
    p = verdict.certificate
    assert p is not None
    assert FERMAT.eval(p.coords) == 0
    assert verdict.fl.eval(p.coords) != 0
    assert verdict.to_json()["verdict"] == "NOT_RULED"


def test_not_ruled_needs_a_certificate():
    # at radius 0 the search only meets (1,0,0), (0,1,0), (0,0,1), all on lines of the surface
    verdict = cayley_salmon_test(FERMAT, [FERMAT], radius=0)[0]
    assert verdict.verdict is Verdict.UNCERTIFIED
    assert verdict.certificate is None
    assert verdict.to_json()["verdict"] == "UNCERTIFIED"
    assert "no rational certificate" in verdict.detail


@pytest.mark.parametrize("text", ["x^3 + y^3 + z^3 - 2", "x^3 + 2*y^3 + z^3 + x*y"])
def test_not_ruled_verdicts_always_verify(text):
    q = P(text)
    for verdict in cayley_salmon_test(q, [q], radius=4):
        if verdict.verdict is Verdict.NOT_RULED:
            p = verdict.certificate
            assert p is not None
            assert q.eval(p.coords) == 0
            assert verdict.fl.eval(p.coords) != 0


def test_ruled_surfaces_give_ruled_evidence():
    assert cayley_salmon_test(UMBRELLA, [UMBRELLA])[0].verdict is Verdict.RULED_EVIDENCE
    verdicts = cayley_salmon_test(P("z*(z - x*y)"), [P("z"), P("z - x*y")])
    assert [v.verdict for v in verdicts] == [Verdict.RULED_EVIDENCE, Verdict.RULED_EVIDENCE]
    assert verdicts[0].detail == "plane"


def test_factors_must_multiply_to_the_surface():
    with pytest.raises(FactorMismatchError):
        cayley_salmon_test(P("z*(z - x*y)"), [P("z")])


def test_caysala_line_bound():
    assert caysala_line_bound(3) == 27
    assert caysala_line_bound(4) == 80


def test_rational_points_lie_on_the_surface():
    points = list(rational_points_on(FERMAT, radius=3))
    assert AffPoint((0, 0, 1)) in points
    assert len(points) == len(set(points))
    assert all(FERMAT.eval(p.coords) == 0 for p in points)


def test_line_search_finds_both_rulings_of_the_regulus():
    result = lines_through_point_exist(P("z - x*y"), AffPoint((0, 0, 0)))
    assert result.status is LineSearch.WITNESS
    assert set(result.witnesses) == {(1, 0, 0), (0, 1, 0)}
    assert result.real_directions_possible


def test_line_search_on_the_fermat_cubic():
    on_line = lines_through_point_exist(FERMAT, AffPoint((0, 0, 1)))
    assert on_line.status is LineSearch.WITNESS
    assert (1, -1, 0) in on_line.witnesses
    assert contains_line(FERMAT, ProjLine.through((0, 0, 1), (1, -1, 0)))
    off_lines = lines_through_point_exist(FERMAT, AffPoint((9, 10, -12)))
    assert off_lines.status is LineSearch.NO
    assert off_lines.witnesses == []


def test_line_search_on_the_sphere_has_only_complex_lines():
    result = lines_through_point_exist(P("x^2 + y^2 + z^2 - 1"), AffPoint((1, 0, 0)))
    assert result.status is LineSearch.RESULTANT_ZERO
    assert not result.real_directions_possible


def test_line_search_requires_a_point_of_the_surface():
    with pytest.raises(NotOnSurfaceError):
        lines_through_point_exist(FERMAT, AffPoint((1, 1, 1)))


@pytest.mark.slow
def test_product_surface_lines_are_flecnodal(product_config):
    fl = flecnode_poly(product_config.surface.f).fl
    assert all(vanishes_on_line(fl, line) for line in product_config.lines)


@pytest.mark.slow
def test_quartic_without_real_points_is_uncertified():
    q = P("x^4 + y^4 + z^4 + 1")
    verdict = cayley_salmon_test(q, [q], radius=2)[0]
    assert verdict.verdict is Verdict.UNCERTIFIED
    assert verdict.certificate is None
