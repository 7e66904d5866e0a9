import math
from fractions import Fraction

import pytest

from lib.incidence import (
    BOUNDS,
    DEFAULT_C,
    IncidenceError,
    Interval,
    MissingParameterError,
    bound_eval,
    focs_factor,
    rational_power,
    xi_threshold,
)


def test_szemeredi_trotter_with_single_point_and_line_is_exact():
    value = bound_eval("ST", {"m": 1, "n": 1}, C=1)
    assert value.value == Interval.exact(3)
    assert value.holds(3)
    assert not value.holds(4)
    assert value.ratio(3) == 1.0


def test_th13a_without_points_is_c_times_n():
    value = bound_eval("TH13A", {"m": 0, "n": 5, "D": 2, "s": 1})
    assert value.C == DEFAULT_C
    assert value.value == Interval.exact(50)


def test_names_are_case_insensitive():
    assert bound_eval("th13b", {"m": 0, "n": 1, "D": 2, "s": 1}, C=1).name == "TH13B"
    assert set(BOUNDS) == {"ST", "GK3", "FOCS4", "TH13A", "TH13B", "TH14A", "TH14B", "CORMAINX", "COR4DX"}


@pytest.mark.parametrize("name, params", [
    ("TH13A", {"m": 1, "n": 1}),
    ("FOCS4", {"m": 1, "n": 1, "s": 1, "q": None}),
    ("COR4DX", {"m": 1, "n": 1, "D": 1, "s": 1}),
])
def test_missing_parameters(name, params):
    with pytest.raises(MissingParameterError):
        bound_eval(name, params)


def test_unknown_bound_and_negative_parameters():
    with pytest.raises(IncidenceError):
        bound_eval("XX", {"m": 1, "n": 1})
    with pytest.raises(IncidenceError):
        bound_eval("ST", {"m": -1, "n": 1})


def test_rational_power_brackets():
    root2 = rational_power(2, Fraction(1, 2))
    assert root2.lo ** 2 <= 2 <= root2.hi ** 2
    assert root2.hi - root2.lo == Fraction(1, 2 ** 64)
    assert rational_power(4, Fraction(1, 2)) == Interval.exact(2)
    assert rational_power(8, Fraction(2, 3)) == Interval.exact(4)
    assert rational_power(Fraction(9, 4), Fraction(1, 2)) == Interval.exact(Fraction(3, 2))
    assert rational_power(0, Fraction(1, 2)) == Interval.exact(0)
    coarse = rational_power(3, Fraction(1, 3), bits=8)
    assert coarse.lo ** 3 <= 3 <= coarse.hi ** 3
    with pytest.raises(IncidenceError):
        rational_power(-1, Fraction(1, 2))


def test_focs_factor():
    assert focs_factor(1) == Interval.exact(1)
    assert focs_factor(0) == Interval.exact(1)
    assert focs_factor(16).contains(4)
    value = focs_factor(1000)
    exact = 2 ** math.sqrt(math.log2(1000))
    assert float(value.lo) <= exact * (1 + 1e-12)
    assert float(value.hi) >= exact * (1 - 1e-12)


def test_xi_threshold():
    assert xi_threshold(0, 10, 2) == 3
    assert xi_threshold(100, 1, 1) == 3
    assert xi_threshold(1, 100, 1) == 10
    xi = xi_threshold(1, 50, 1)
    assert xi ** 2 <= 50 < (xi + Fraction(1, 2 ** 16)) ** 2


def test_bound_value_ratio_and_json():
    zero = bound_eval("ST", {"m": 1, "n": 1}, C=0)
    assert zero.ratio(0) == 0.0
    assert zero.ratio(1) == math.inf
    data = bound_eval("ST", {"m": 8, "n": 1}, C=1).to_json(5)
    assert data["value"] == ["13", "13"]
    assert data["holds"] and data["ratio"] == pytest.approx(5 / 13)
    assert data["params"] == {"m": "8", "n": "1"}


def test_bounds_grow_with_their_extra_terms():
    params = {"m": 100, "n": 50, "D": 3, "s": 4, "q": 50}
    assert bound_eval("TH13B", params).value.lo > bound_eval("TH13A", params).value.lo
    assert bound_eval("TH14B", params).value.lo > bound_eval("TH14A", params).value.lo
    focs = bound_eval("FOCS4", params).value
    assert focs.lo <= focs.hi
