# -*- coding: utf-8 -*-
"""
Proiezione generica di una configurazione in dimensione più bassa.

Ogni passo proietta ortogonalmente sull'iperpiano w^T = 0 con w intero
pseudo-casuale (h(v) = v - (v.w)/(w.w) w, esatto perché w non è
normalizzato) e poi scarta una coordinata con w_k != 0, che è una
biiezione lineare da w^T a R^(d-1). Dopo la proiezione si verifica che
nulla sia degenerato; in caso contrario si riprova con un altro seme.
"""

import dataclasses
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from lib.geometry import linalg
from lib.geometry.primitives import (
    AffPoint,
    GeometryError,
    ProjLine,
    lines_all_coplanar,
    lines_coplanar,
    point_on_line,
)

logger = logging.getLogger(__name__)

W_RANGE = 9


class ProjectionError(GeometryError):
    """Every retry produced a degenerate image."""


@dataclass
class ProjectionReport:
    seed: int
    attempts: int = 0
    steps: list = field(default_factory=list)
    sampled_triples: int = 0

    def to_json(self):
        return {
            "seed": self.seed,
            "attempts": self.attempts,
            "sampled_triples": self.sampled_triples,
            "w": [[str(v) for v in step["w"]] for step in self.steps],
            "dropped": [step["dropped"] for step in self.steps],
        }


def _random_w(rng, dim):
    while True:
        w = tuple(Fraction(int(v)) for v in rng.integers(-W_RANGE, W_RANGE + 1, size=dim))
        if any(w):
            return w


def _make_step(w):
    k = max(i for i, v in enumerate(w) if v != 0)
    ww = linalg.dot(w, w)

    def linear(v):
        c = linalg.dot(v, w) / ww
        image = linalg.sub(v, linalg.scale(w, c))
        return image[:k] + image[k + 1:]

    return linear, k


def _project_once(points, lines, target_dim, rng):
    steps = []
    dim = points[0].dim if points else lines[0].dim
    while dim > target_dim:
        w = _random_w(rng, dim)
        linear, k = _make_step(w)
        points = [AffPoint(linear(p.coords)) for p in points]
        new_lines = []
        for line in lines:
            direction = linear(line.direction)
            if not any(direction):
                return None, None, steps
            new_lines.append(ProjLine.through(AffPoint(linear(line.base.coords)), direction))
        lines = new_lines
        steps.append({"w": w, "dropped": k})
        dim -= 1
    return points, lines, steps


def _incidences(points, lines):
    return {(i, j) for i, p in enumerate(points) for j, l in enumerate(lines) if point_on_line(p, l)}


def _sample_triples(lines, count, rng):
    """Up to `count` index triples of lines that are not all coplanar."""
    n = len(lines)
    if n < 3:
        return []
    total = n * (n - 1) * (n - 2) // 6
    if total <= count:
        candidates = list(itertools.combinations(range(n), 3))
    else:
        candidates = set()
        while len(candidates) < count * 4 and len(candidates) < total:
            candidates.add(tuple(sorted(int(i) for i in rng.choice(n, size=3, replace=False))))
        candidates = sorted(candidates)
    chosen = []
    for a, b, c in candidates:
        if not lines_all_coplanar(lines[a], lines[b], lines[c]):
            chosen.append((a, b, c))
            if len(chosen) == count:
                break
    return chosen


def _validate(points, lines, new_points, new_lines, incidences, triples):
    if len(set(new_points)) != len(new_points):
        return "projected points collide"
    if len(set(new_lines)) != len(new_lines):
        return "projected lines collide"
    if _incidences(new_points, new_lines) != incidences:
        return "incidence relation changed"
    for i, j in itertools.combinations(range(len(lines)), 2):
        if lines_coplanar(new_lines[i], new_lines[j]) and not lines_coplanar(lines[i], lines[j]):
            return f"lines {i} and {j} became coplanar"
    for a, b, c in triples:
        if lines_all_coplanar(new_lines[a], new_lines[b], new_lines[c]):
            return f"triple {(a, b, c)} became coplanar"
    return None


def project_generic(config, target_dim, seed, max_retries=8, sample_triples=50):
    """
    Project `config` to `target_dim` dimensions.

    Returns (projected config, ProjectionReport). The surface is dropped:
    the image of the points and lines is not described by the old equation.
    """
    dim = config.ambient_dim
    if not (2 <= target_dim < dim):
        raise GeometryError(f"target dimension {target_dim} must be below {dim}")
    points, lines = list(config.points), list(config.lines)
    if not points and not lines:
        raise GeometryError("nothing to project")
    incidences = _incidences(points, lines)
    triples = _sample_triples(lines, sample_triples, np.random.default_rng([seed, 0]))
    report = ProjectionReport(seed=seed, sampled_triples=len(triples))
    for attempt in range(max_retries):
        rng = np.random.default_rng([seed, attempt + 1])
        new_points, new_lines, steps = _project_once(points, lines, target_dim, rng)
        report.attempts = attempt + 1
        problem = "a line collapsed to a point" if new_lines is None else \
            _validate(points, lines, new_points, new_lines, incidences, triples)
        if problem is None:
            report.steps = steps
            logger.debug(f"Projection {dim} -> {target_dim} accepted at attempt {attempt + 1}")
            projected = dataclasses.replace(config, ambient_dim=target_dim, points=tuple(new_points),
                                            lines=tuple(new_lines), surface=None, contained=None)
            return projected, report
        logger.debug(f"Projection attempt {attempt + 1} (seed {seed}) rejected: {problem}")
    raise ProjectionError(f"no generic projection found in {max_retries} attempts (seed {seed})")
