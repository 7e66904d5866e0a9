# -*- coding: utf-8 -*-
"""
Verifica esatta, su una configurazione concreta, delle disuguaglianze
usate nella dimostrazione del limite per superfici rigate.

Ogni controllo produce un CheckResult con stato "passed", "failed" o
"skipped"; le violazioni sono elencate nel dettaglio. Le quantità Lambda
vengono dal catalogo chiuso delle generatrici (cilindri, coni, reguli):
le componenti senza catalogo, né piane né dichiarate non rigate, non
sono verificabili e la suite si rifiuta di partire.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from lib.flecnode import caysala_line_bound
from lib.geometry import ProjLine, point_on_line
from lib.incidence.assignment import component_is_ruled, derivative_chain_assign, line_partition, tag_conical
from lib.incidence.bounds import xi_threshold
from lib.incidence.config import Config
from lib.incidence.counting import incidence_table, rich_points
from lib.incidence.errors import ChainExhaustedError, IncidenceError, UncataloguedSurfaceError
from lib.surfaces import contains_line, is_flat_point, is_singular_point

logger = logging.getLogger(__name__)

PROBE_RANGE = 9
CHECKS = ("generator_sum", "claim_4d", "two_rich", "caysala", "linear_flatness",
          "exceptional_point", "chain_charge", "threshold")


@dataclass
class CheckResult:
    name: str
    status: str
    detail: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == "passed"

    def to_json(self):
        return {"name": self.name, "status": self.status, "detail": self.detail}


def _verdict(name, violations, **detail):
    detail["violations"] = violations
    status = "failed" if violations else "passed"
    if violations:
        logger.warning(f"Check {name} failed with {len(violations)} violations")
    return CheckResult(name, status, detail)


def _skipped(name, reason):
    return CheckResult(name, "skipped", {"reason": reason})


def probe_lines(count, seed=0, dim=3):
    """Seeded lines with integer base and direction in [-9, 9]."""
    rng = np.random.default_rng(seed)
    lines = []
    while len(lines) < count:
        base = [int(v) for v in rng.integers(-PROBE_RANGE, PROBE_RANGE + 1, size=dim)]
        direction = [int(v) for v in rng.integers(-PROBE_RANGE, PROBE_RANGE + 1, size=dim)]
        if any(direction):
            lines.append(ProjLine.through(base, direction))
    return lines


def check_catalogued(surface):
    for c in surface.components:
        if c.is_plane or c.generators is not None or c.ruled is False:
            continue
        raise UncataloguedSurfaceError(f"component {c.factor} has no closed-form generator family")


def generator_sum(config, probes):
    """
    Sum of Lambda over l meet W for probe lines, and of Lambda* along the
    contained config lines, for every singly ruled component W.
    """
    surface = config.surface
    D = surface.degree
    families = [c for c in surface.components if c.singly_ruled]
    if not families:
        return _skipped("generator_sum", "no singly ruled component")
    violations, worst = [], 0
    for line in probes:
        total = 0
        for c in families:
            value = c.generators.lambda_sum_on(line)
            total += value
            if value > c.degree:
                violations.append({"probe": line.to_json(), "component": str(c.factor), "sum": value})
        worst = max(worst, total)
        if total > D:
            violations.append({"probe": line.to_json(), "sum": total, "bound": D})
    contained_sums = 0
    for line in config.contained_lines():
        for c in families:
            if not contains_line(c.factor, line):
                continue
            crossing = c.generators.crossing_generators(line, config.points)
            star = sum(len(g) for g in crossing.values())
            contained_sums += 1
            if star > c.degree:
                violations.append({"line": line.to_json(), "component": str(c.factor), "star_sum": star})
    return _verdict("generator_sum", violations, probes=len(probes), max_sum=worst, bound=D,
                    contained_lines=contained_sums)


def _non_conical_degrees(config, table, tags, members):
    """Number of lines of `members` non-conically incident at each point."""
    return [sum(1 for j in table[i] if j in members and not tags.is_conical(i, j)) for i in range(config.m)]


def claim_4d(config, table=None, partition=None, tags=None):
    """
    After pruning the points non-conically incident to at most three L1
    lines, every L1 line meets at most 4D other L1 lines non-conically.
    """
    table = table if table is not None else incidence_table(config)
    partition = partition or line_partition(config)
    tags = tags or tag_conical(config, table)
    members = set(partition.L1)
    nc = _non_conical_degrees(config, table, tags, members)
    survivors = {i for i in range(config.m) if nc[i] > 3}
    bound = 4 * config.surface.degree
    violations, worst = [], 0
    for j in partition.L1:
        others = 0
        for i in survivors:
            if j in table[i]:
                others += sum(1 for k in table[i] if k in members and k != j and not tags.is_conical(i, k))
        worst = max(worst, others)
        if others > bound:
            violations.append({"line": j, "others": others, "bound": bound})
    return _verdict("claim_4d", violations, pruned=config.m - len(survivors), survivors=len(survivors),
                    max_degree=worst, bound=bound)


def two_rich(config):
    if config.surface.has_plane_or_regulus():
        return _skipped("two_rich", "plane or regulus component present")
    count = len(rich_points(config, 2))
    bound = config.n * config.surface.degree
    violations = [] if count <= bound else [{"rich": count, "bound": bound}]
    return _verdict("two_rich", violations, rich=count, bound=bound)


def caysala(config):
    """Lines inside each irreducible non-ruled component are at most 11D^2 - 24D."""
    checked, violations = [], []
    for c in config.surface.components:
        if c.degree < 3 or component_is_ruled(c):
            continue
        count = sum(1 for line in config.lines if contains_line(c.factor, line))
        bound = caysala_line_bound(c.degree)
        checked.append({"component": str(c.factor), "lines": count, "bound": bound})
        if count > bound:
            violations.append(checked[-1])
    if not checked:
        return _skipped("caysala", "no non-ruled component of degree >= 3")
    return _verdict("caysala", violations, components=checked)


def linear_flatness(config, table=None):
    """Non-singular points on at least three contained lines are flat."""
    table = table if table is not None else incidence_table(config)
    f = config.surface.f
    contained = config.contained
    found, violations = 0, []
    for i, p in enumerate(config.points):
        if sum(1 for j in table[i] if contained[j]) < 3 or is_singular_point(f, p):
            continue
        found += 1
        if not is_flat_point(f, p):
            violations.append({"point": p.to_json()})
    return _verdict("linear_flatness", violations, linearly_flat_points=found)


def exceptional_point(config):
    """In each cone the apex is the only point on three or more of its lines, and every line passes through it."""
    cones = [c for c in config.surface.components if c.cone_apex is not None]
    if not cones:
        return _skipped("exceptional_point", "no cone component")
    violations = []
    for c in cones:
        lines = [line for line in config.contained_lines() if contains_line(c.factor, line)]
        for line in lines:
            if not point_on_line(c.cone_apex, line):
                violations.append({"component": str(c.factor), "line": line.to_json(), "misses_apex": True})
        if len(lines) < 2:
            continue
        sub = Config(config.ambient_dim, (), tuple(lines))
        for p, degree in rich_points(sub, 3):
            if p != c.cone_apex:
                violations.append({"component": str(c.factor), "point": p.to_json(), "degree": degree})
    return _verdict("exceptional_point", violations, cones=len(cones))


def chain_charge(config, variables=None):
    """Derivative chain on the contained part of the config, first coordinate that assigns everything."""
    f = config.surface.f
    points = tuple(p for p in config.points if f.eval(p.coords) == 0)
    sub = Config(config.ambient_dim, points, tuple(config.contained_lines()))
    tried = []
    for var in variables or f.variables:
        try:
            chain = derivative_chain_assign(f, sub, var)
        except ChainExhaustedError as e:
            tried.append(f"{var}: {e}")
            continue
        violations = chain.claim_violations + chain.charge_violations
        return _verdict("chain_charge", violations, variable=var, chain=[str(g) for g in chain.chain],
                        claim_violations=len(chain.claim_violations),
                        charge_violations=len(chain.charge_violations))
    return _skipped("chain_charge", "; ".join(tried))


@dataclass
class ThresholdReport:
    xi: Fraction
    conical: int
    low: int
    high: int
    per_line_high: dict
    line_violations: list
    bound: Fraction

    @property
    def total(self):
        return self.conical + self.low + self.high

    @property
    def holds(self):
        return not self.line_violations and self.total <= self.bound

    def to_json(self):
        return {
            "xi": str(self.xi),
            "conical": self.conical,
            "low": self.low,
            "high": self.high,
            "total": self.total,
            "bound": str(self.bound),
            "holds": self.holds,
            "per_line_high": {str(j): t for j, t in self.per_line_high.items()},
            "line_violations": self.line_violations,
        }


def threshold_split(config, xi=None, table=None, partition=None, tags=None):
    """
    I(P, L1) split into conical incidences, incidences at points with at
    most xi non-conical L1 lines, and the rest; a line of L1 has at most
    4D/xi points of the last kind.
    """
    if config.surface is None:
        raise IncidenceError("threshold_split needs a surface")
    table = table if table is not None else incidence_table(config)
    partition = partition or line_partition(config)
    tags = tags or tag_conical(config, table)
    D = config.surface.degree
    members = set(partition.L1)
    xi = Fraction(xi) if xi is not None else xi_threshold(config.m, config.n, D)
    if xi < 3:
        raise IncidenceError(f"threshold {xi} is below 3")
    nc = _non_conical_degrees(config, table, tags, members)
    conical = sum(1 for i in range(config.m) for j in table[i] if j in members and tags.is_conical(i, j))
    low = sum(d for d in nc if d <= xi)
    high = sum(d for d in nc if d > xi)
    per_line = {}
    for j in partition.L1:
        per_line[j] = sum(1 for i in range(config.m) if nc[i] > xi and j in table[i] and not tags.is_conical(i, j))
    violations = [{"line": j, "high_points": t, "bound": str(4 * D / xi)}
                  for j, t in per_line.items() if t * xi > 4 * D]
    bound = config.m * xi + config.n + Fraction(4 * config.n * D) / xi
    report = ThresholdReport(xi, conical, low, high, per_line, violations, bound)
    logger.debug(f"Threshold split at xi={xi}: conical {conical}, low {low}, high {high}, bound {float(bound)}")
    return report


def _threshold_check(config, table, partition, tags):
    report = threshold_split(config, table=table, partition=partition, tags=tags)
    violations = list(report.line_violations)
    if report.total > report.bound:
        violations.append({"total": report.total, "bound": str(report.bound)})
    return _verdict("threshold", violations, **report.to_json())


@dataclass
class LemmaReport:
    checks: list

    @property
    def passed(self):
        return all(c.status != "failed" for c in self.checks)

    def get(self, name):
        return next((c for c in self.checks if c.name == name), None)

    def to_json(self):
        return {"passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def lemma_suite(config, probe_count=100, probe_seed=0, checks=CHECKS):
    if config.surface is None:
        raise IncidenceError("lemma_suite needs a surface")
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise IncidenceError(f"Unknown checks: {', '.join(sorted(unknown))}")
    if config.ambient_dim != 3:
        results = [chain_charge(config) if name == "chain_charge"
                   else _skipped(name, "three-dimensional statement") for name in checks]
        return LemmaReport(results)
    check_catalogued(config.surface)

    table = incidence_table(config)
    partition = line_partition(config)
    tags = tag_conical(config, table)
    runners = {
        "generator_sum": lambda: generator_sum(config, probe_lines(probe_count, probe_seed)),
        "claim_4d": lambda: claim_4d(config, table, partition, tags),
        "two_rich": lambda: two_rich(config),
        "caysala": lambda: caysala(config),
        "linear_flatness": lambda: linear_flatness(config, table),
        "exceptional_point": lambda: exceptional_point(config),
        "chain_charge": lambda: chain_charge(config),
        "threshold": lambda: _threshold_check(config, table, partition, tags),
    }
    results = []
    for name in checks:
        results.append(runners[name]())
        logger.info(f"Lemma check {name}: {results[-1].status}")
    return LemmaReport(results)
