# -*- coding: utf-8 -*-
"""IncidenceReport: conteggi, parametro s, assegnazioni e limiti valutati su una configurazione."""

import logging
from dataclasses import dataclass, field

import pandas as pd

from lib.incidence.assignment import assign_components, tag_conical
from lib.incidence.bounds import DEFAULT_C, PRECISION_BITS, bound_eval
from lib.incidence.counting import (
    count_incidences,
    incidence_table,
    max_coplanar_s,
    points_per_line,
    rich_point_counts,
)
from lib.incidence.errors import IncidenceError

logger = logging.getLogger(__name__)

BOUND_COLUMNS = ["name", "C", "lo", "hi", "I", "ratio", "holds"]


@dataclass
class IncidenceReport:
    I: int
    m: int
    n: int
    rich_points: dict
    s: int
    D: int = None
    per_component: object = None
    conical_count: int = 0
    bounds: list = field(default_factory=list)

    def params(self, q=None):
        return {"m": self.m, "n": self.n, "D": self.D, "s": self.s, "q": q}

    def to_json(self):
        return {
            "I": self.I,
            "m": self.m,
            "n": self.n,
            "D": self.D,
            "s": self.s,
            "rich_points": {str(r): c for r, c in self.rich_points.items()},
            "per_component": self.per_component.to_json() if self.per_component is not None else None,
            "conical_count": self.conical_count,
            "bounds": self.bounds,
        }


def incidence_report(config, bound_names=(), C=DEFAULT_C, q=None, bits=PRECISION_BITS, overrides=None):
    """
    Everything the CLI prints for a config. `overrides` replaces m, n, D, s
    or q in the bound parameters; a bound whose parameters are missing is
    reported with its error instead of stopping the report.
    """
    table = incidence_table(config)
    I = sum(len(t) for t in table)
    report = IncidenceReport(I, config.m, config.n, rich_point_counts(config), max_coplanar_s(config))
    if config.surface is not None:
        report.D = config.surface.degree
        report.per_component = assign_components(config)
        report.conical_count = tag_conical(config, table).conical_count
    params = report.params(q)
    params.update(overrides or {})
    for name in bound_names:
        try:
            value = bound_eval(name, params, C, bits)
        except IncidenceError as e:
            logger.warning(f"Bound {name} not evaluated: {e}")
            report.bounds.append({"name": name, "error": str(e)})
            continue
        report.bounds.append(value.to_json(I))
    return report


def bounds_frame(report):
    """One row per evaluated bound."""
    rows = []
    for b in report.bounds:
        if "error" in b:
            continue
        rows.append({"name": b["name"], "C": b["C"], "lo": b["value"][0], "hi": b["value"][1],
                     "I": b["I"], "ratio": b["ratio"], "holds": b["holds"]})
    return pd.DataFrame(rows, columns=BOUND_COLUMNS)


def check_double_count(config):
    """Incidences counted from the points and from the lines agree."""
    by_points = count_incidences(config)
    by_lines = sum(points_per_line(config))
    if by_points != by_lines:
        raise ArithmeticError(f"incidence count {by_points} from points, {by_lines} from lines")
    return by_points
