from fractions import Fraction

import pytest

from lib.geometry import AffPoint, ProjLine
from lib.incidence import (
    CHECKS,
    Config,
    IncidenceError,
    UncataloguedSurfaceError,
    lemma_suite,
    probe_lines,
    threshold_split,
)
from lib.incidence.lemmas import caysala, claim_4d, exceptional_point, generator_sum, linear_flatness, two_rich
from lib.lab import CATALOG
from lib.lab.catalog import cone_lines
from lib.polycore import parse_poly as P
from lib.surfaces import ComponentMeta, RegulusFamily, SurfaceModel


def test_probe_lines_are_seeded():
    assert probe_lines(20, seed=4) == probe_lines(20, seed=4)
    assert probe_lines(20, seed=4) != probe_lines(20, seed=5)
    assert all(line.dim == 4 for line in probe_lines(5, dim=4))


@pytest.mark.parametrize("fixture", ["cylinder_config", "cone_config", "product_config"])
def test_generator_sum_stays_below_the_degree(fixture, request):
    config = request.getfixturevalue(fixture)
    result = generator_sum(config, probe_lines(100))
    assert result.passed, result.detail["violations"]
    assert result.detail["max_sum"] <= config.surface.degree
    assert result.detail["probes"] == 100


def test_generator_sum_skips_doubly_ruled_surfaces(regulus3):
    assert generator_sum(regulus3, probe_lines(10)).status == "skipped"


def test_claim_4d(product_config, cone_config):
    result = claim_4d(product_config)
    assert result.passed
    assert result.detail["bound"] == 16
    assert claim_4d(cone_config).passed


def test_claim_4d_ignores_cone_generators_at_a_shared_apex():
    cone = CATALOG["cone"]
    saddle, twisted = P("z - x*y"), P("z - x^2 + y^2")
    surface = SurfaceModel(cone.polynomial * saddle * twisted, [
        ComponentMeta(cone.polynomial, **cone.component_meta()),
        ComponentMeta(saddle, is_regulus=True, ruled=True, generators=RegulusFamily(saddle)),
        ComponentMeta(twisted, is_regulus=True, ruled=True, generators=RegulusFamily(twisted)),
    ])
    through_origin = [ProjLine.through((0, 0, 0), d) for d in ((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0))]
    config = Config(3, (AffPoint((0, 0, 0)),), tuple(cone_lines(30)) + tuple(through_origin), surface)
    result = claim_4d(config)
    assert result.passed, result.detail["violations"]
    assert result.detail["survivors"] == 1
    assert result.detail["bound"] == 24
    # a cone line sees all four regulus lines, a regulus line the other three
    assert result.detail["max_degree"] == 4


def test_two_rich(cone_config, regulus3):
    result = two_rich(cone_config)
    assert result.passed
    assert result.detail["rich"] == 1
    assert two_rich(regulus3).status == "skipped"


def test_caysala_on_the_fermat_cubic():
    fermat = CATALOG["fermat-cubic"]
    config = Config(3, (), tuple(fermat.lines(3)), fermat.surface())
    result = caysala(config)
    assert result.passed
    assert result.detail["components"][0]["bound"] == 27
    assert result.detail["components"][0]["lines"] == 3


def test_linear_flatness_ignores_singular_points(cone_config):
    result = linear_flatness(cone_config)
    assert result.passed
    assert result.detail["linearly_flat_points"] == 0


def test_exceptional_point(cone_config, cylinder_config):
    assert exceptional_point(cone_config).passed
    assert exceptional_point(cylinder_config).status == "skipped"


def test_full_suite_on_catalogued_surfaces(cone_config, cylinder_config, product_config, regulus3):
    for config in (cone_config, cylinder_config, product_config, regulus3):
        report = lemma_suite(config)
        assert report.passed, report.to_json()
        assert [c.name for c in report.checks] == list(CHECKS)
    # x and y exhaust the chain at the origin
    assert lemma_suite(regulus3).get("chain_charge").detail["variable"] == "z"


def test_suite_refuses_uncatalogued_components():
    for name in ("sphere", "whitney-umbrella"):
        config = Config(3, (), (), CATALOG[name].surface())
        with pytest.raises(UncataloguedSurfaceError):
            lemma_suite(config)


def test_suite_input_errors(regulus3):
    with pytest.raises(IncidenceError):
        lemma_suite(Config(3, (), ()))
    with pytest.raises(IncidenceError):
        lemma_suite(regulus3, checks=("nope",))


def test_four_dimensional_suite_runs_only_the_chain(variety2):
    report = lemma_suite(variety2)
    assert report.passed
    for check in report.checks:
        expected = "passed" if check.name == "chain_charge" else "skipped"
        assert check.status == expected, check.to_json()


def test_threshold_split(cone_config):
    report = threshold_split(cone_config)
    assert report.holds
    assert report.xi >= 3
    assert report.conical == cone_config.n
    assert report.total == 24
    fixed = threshold_split(cone_config, xi=Fraction(7, 2))
    assert fixed.xi == Fraction(7, 2)
    assert fixed.to_json()["holds"]
    with pytest.raises(IncidenceError):
        threshold_split(cone_config, xi=2)
    with pytest.raises(IncidenceError):
        threshold_split(Config(3, (), ()))
