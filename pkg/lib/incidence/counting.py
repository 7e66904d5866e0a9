# -*- coding: utf-8 -*-
"""Conteggi esatti a forza bruta: incidenze, punti ricchi e parametro di planarità s."""

import itertools
import logging
from collections import defaultdict

from lib.geometry import line_intersection, lines_coplanar, point_on_line, span_2flat

logger = logging.getLogger(__name__)


def incidence_table(config):
    """For every point index, the sorted indices of the lines through it."""
    return [[j for j, line in enumerate(config.lines) if point_on_line(p, line)] for p in config.points]


def incidence_pairs(config):
    return [(i, j) for i, through in enumerate(incidence_table(config)) for j in through]


def count_incidences(config):
    return sum(len(through) for through in incidence_table(config))


def points_per_line(config):
    return [sum(1 for p in config.points if point_on_line(p, line)) for line in config.lines]


def _meeting_points(config):
    meets = defaultdict(set)
    for (i, a), (j, b) in itertools.combinations(enumerate(config.lines), 2):
        p = line_intersection(a, b)
        if p is not None:
            meets[p].update((i, j))
    return meets


def rich_points(config, r=2):
    """Points of the ambient space on at least r lines, with their degree, sorted by coordinates."""
    if r < 2:
        raise ValueError(f"richness must be at least 2 (got {r})")
    meets = _meeting_points(config)
    rich = sorted(((p, len(lines)) for p, lines in meets.items() if len(lines) >= r), key=lambda x: x[0].coords)
    logger.debug(f"{len(meets)} meeting points, {len(rich)} of them {r}-rich")
    return rich


def rich_point_counts(config):
    """{r: number of r-rich points} for r from 2 to the largest degree."""
    degrees = [len(lines) for lines in _meeting_points(config).values()]
    if not degrees:
        return {}
    return {r: sum(1 for d in degrees if d >= r) for r in range(2, max(degrees) + 1)}


def intersecting_pairs(config):
    return sum(1 for a, b in itertools.combinations(config.lines, 2) if line_intersection(a, b) is not None)


def max_coplanar_s(config):
    """Largest number of lines of the config inside one 2-flat."""
    lines = config.lines
    if len(lines) < 2:
        return len(lines)
    flats = {span_2flat(a, b) for a, b in itertools.combinations(lines, 2) if lines_coplanar(a, b)}
    if not flats:
        return 1
    best = max(sum(1 for line in lines if flat.contains_line(line)) for flat in flats)
    logger.debug(f"{len(flats)} distinct 2-flats spanned by coplanar pairs, s = {best}")
    return best
