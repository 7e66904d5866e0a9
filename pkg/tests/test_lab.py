import itertools

import pytest

from lib.incidence import count_incidences
from lib.lab import (
    CATALOG,
    GENERATORS,
    Family,
    GeneratorError,
    GeneratorSpec,
    catalog_entry,
    gen,
    pythagorean_triples,
)
from lib.surfaces import contains_line


@pytest.mark.parametrize("name", sorted(set(CATALOG) - {"sphere"}))
def test_catalogued_lines_lie_on_their_surface(name):
    entry = CATALOG[name]
    lines = entry.lines(20)
    assert lines
    assert len(set(lines)) == len(lines)
    assert all(contains_line(entry.polynomial, line) for line in lines)


def test_catalog_entries():
    assert CATALOG["sphere"].lines(10) == []
    assert CATALOG["fermat-cubic"].degree == 3
    assert CATALOG["cone"].apex().coords == (0, 0, 0)
    assert CATALOG["xyz-variety"].surface().dim == 4
    with pytest.raises(GeneratorError):
        catalog_entry("torus")


def test_pythagorean_triples():
    triples = list(itertools.islice(pythagorean_triples(), 4))
    assert triples == [(3, 4, 5), (5, 12, 13), (15, 8, 17), (7, 24, 25)]


@pytest.mark.parametrize("spec, m, n, incidences", [
    (GeneratorSpec("regulus-grid", g=4), 16, 8, 32),
    (GeneratorSpec("parabolic-cylinder", n=5), 10, 5, 10),
    (GeneratorSpec("parabolic-cylinder", n=4, m=7), 7, 4, 7),
    (GeneratorSpec("cone-pythagorean", n=5, seed=9), 16, 5, 20),
    (GeneratorSpec("elekes", a=2, b=3), 24, 18, 36),
    (GeneratorSpec("variety-4d", g=3), 27, 27, 81),
])
def test_ground_truth(spec, m, n, incidences):
    config = gen(spec)
    assert (config.m, config.n) == (m, n)
    assert count_incidences(config) == incidences


def test_generated_lines_are_contained(product_config, variety2):
    assert all(product_config.contained)
    assert all(variety2.contained)
    assert len(product_config.surface.components) == 2


def test_generation_is_deterministic():
    for family in Family:
        spec = GeneratorSpec.for_size(family, 3, seed=5)
        assert gen(spec).to_json() == gen(spec).to_json()
    assert set(GENERATORS) == set(Family)


def test_seeds_change_sampled_points():
    first = gen(GeneratorSpec("parabolic-cylinder", n=6, seed=1))
    second = gen(GeneratorSpec("parabolic-cylinder", n=6, seed=2))
    assert first.lines == second.lines
    assert first.points != second.points


def test_spec_parsing_and_json():
    assert Family.parse("REGULUS_GRID") is Family.REGULUS_GRID
    spec = GeneratorSpec.for_size("elekes", 3, seed=2)
    assert (spec.a, spec.b, spec.size) == (3, 3, 3)
    assert GeneratorSpec.from_json(spec.to_json()) == spec
    assert spec.to_json() == {"family": "elekes", "a": 3, "b": 3, "seed": 2}


@pytest.mark.parametrize("make", [
    lambda: GeneratorSpec("torus-grid", g=2),
    lambda: GeneratorSpec("regulus-grid", g=0),
    lambda: gen(GeneratorSpec("regulus-grid")),
    lambda: gen(GeneratorSpec("elekes", a=2)),
    lambda: gen(GeneratorSpec("product-surface", n=1)),
    lambda: gen(GeneratorSpec("variety-4d", g=50)),
])
def test_generator_errors(make):
    with pytest.raises(GeneratorError):
        make()
