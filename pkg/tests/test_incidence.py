import json

import pytest

from lib.geometry import AffPoint, ProjLine
from lib.incidence import (
    Config,
    IncidenceError,
    bounds_frame,
    check_double_count,
    count_incidences,
    incidence_pairs,
    incidence_report,
    incidence_table,
    intersecting_pairs,
    load_config,
    max_coplanar_s,
    points_per_line,
    rich_point_counts,
    rich_points,
    save_config,
)
from lib.lab import CATALOG

X_AXIS = ProjLine.through((0, 0, 0), (1, 0, 0))
Y_AXIS = ProjLine.through((0, 0, 0), (0, 1, 0))


def test_config_rejects_duplicates_and_mixed_dimensions():
    with pytest.raises(IncidenceError):
        Config(3, (AffPoint((1, 2, 3)), AffPoint((1, 2, 3))), ())
    with pytest.raises(IncidenceError):
        Config(3, (), (X_AXIS, ProjLine.through((5, 0, 0), (-1, 0, 0))))
    with pytest.raises(IncidenceError):
        Config(3, (AffPoint((1, 2)),), ())
    with pytest.raises(IncidenceError):
        Config(1, (), ())


def test_containment_flags_are_verified():
    surface = CATALOG["regulus"].surface()
    config = Config(3, (), (X_AXIS, ProjLine.through((0, 0, 1), (1, 1, 0))), surface)
    assert config.contained == (True, False)
    assert config.contained_lines() == [X_AXIS]
    with pytest.raises(IncidenceError):
        Config(3, (), (X_AXIS,), surface, contained=(False,))
    with pytest.raises(IncidenceError):
        Config(3, (), (X_AXIS,), surface, contained=(True, True))
    with pytest.raises(IncidenceError):
        Config(3, (), (X_AXIS,), None, contained=(True,))
    with pytest.raises(IncidenceError):
        Config(4, (), (), surface)


def test_degree_needs_a_surface():
    assert Config(3, (), (X_AXIS,), CATALOG["cone"].surface()).degree == 2
    with pytest.raises(IncidenceError):
        Config(3, (), (X_AXIS,)).degree


def test_save_and_load(tmp_path, regulus3):
    path = str(tmp_path / "nested" / "regulus.json")
    save_config(regulus3, path)
    again = load_config(path)
    assert again.to_json() == regulus3.to_json()
    assert again.contained == regulus3.contained
    assert count_incidences(again) == 18


def test_load_rejects_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(IncidenceError):
        load_config(str(path))


def test_load_rechecks_containment(tmp_path, regulus3):
    data = regulus3.to_json()
    data["contained"][0] = False
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(data))
    with pytest.raises(IncidenceError):
        load_config(str(path))


def test_counts_on_the_regulus_grid(regulus3):
    assert (regulus3.m, regulus3.n) == (9, 6)
    assert count_incidences(regulus3) == 18
    assert check_double_count(regulus3) == 18
    assert points_per_line(regulus3) == [3] * 6
    assert all(len(through) == 2 for through in incidence_table(regulus3))
    assert len(incidence_pairs(regulus3)) == 18
    assert intersecting_pairs(regulus3) == 9


def test_counts_on_the_xyz_variety(variety2):
    assert (variety2.m, variety2.n) == (8, 12)
    assert count_incidences(variety2) == 24
    assert points_per_line(variety2) == [2] * 12


def test_rich_points(regulus3, cone_config):
    rich = rich_points(regulus3)
    assert len(rich) == 9
    assert all(degree == 2 for _, degree in rich)
    assert rich_point_counts(regulus3) == {2: 9}
    apex = AffPoint((0, 0, 0))
    assert rich_points(cone_config, 3) == [(apex, 6)]
    assert rich_point_counts(cone_config) == {r: 1 for r in range(2, 7)}
    with pytest.raises(ValueError):
        rich_points(regulus3, 1)


def test_rich_points_include_meetings_outside_the_point_set():
    config = Config(3, (), (X_AXIS, Y_AXIS))
    assert rich_points(config) == [(AffPoint((0, 0, 0)), 2)]
    assert rich_point_counts(Config(3, (), (X_AXIS,))) == {}


def test_max_coplanar_s(regulus3):
    assert max_coplanar_s(regulus3) == 2
    assert max_coplanar_s(Config(3, (), ())) == 0
    assert max_coplanar_s(Config(3, (), (X_AXIS,))) == 1
    skew = ProjLine.through((0, 0, 1), (0, 1, 0))
    assert max_coplanar_s(Config(3, (), (X_AXIS, skew))) == 1
    flat = (X_AXIS, Y_AXIS, ProjLine.through((1, 1, 0), (1, -1, 0)), skew)
    assert max_coplanar_s(Config(3, (), flat)) == 3


def test_incidence_report_with_bounds(regulus3):
    report = incidence_report(regulus3, ["TH13A", "ST", "FOCS4"])
    assert (report.I, report.m, report.n, report.D, report.s) == (18, 9, 6, 2, 2)
    assert report.per_component.cross_incidences == 0
    assert report.conical_count == 0
    th13a, st, focs4 = report.bounds
    assert th13a["holds"] and st["holds"]
    assert 0 < th13a["ratio"] < 1
    assert "error" in focs4
    frame = bounds_frame(report)
    assert list(frame["name"]) == ["TH13A", "ST"]
    assert frame["holds"].all()
    data = report.to_json()
    assert data["rich_points"] == {"2": 9}


def test_incidence_report_without_surface_needs_the_degree():
    config = Config(3, (AffPoint((0, 0, 0)),), (X_AXIS, Y_AXIS))
    report = incidence_report(config, ["TH13A"])
    assert report.D is None and report.per_component is None
    assert "error" in report.bounds[0]
    report = incidence_report(config, ["TH13A"], overrides={"D": 1})
    assert report.bounds[0]["holds"]
