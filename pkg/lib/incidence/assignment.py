# -*- coding: utf-8 -*-
"""
Assegnazioni della dimostrazione: punti e rette alle componenti della
superficie, incidenze coniche, catena delle derivate e partizione L0/L1.

Ogni procedura verifica da sé la disuguaglianza che la dimostrazione ne
ricava e riporta le violazioni invece di sollevare eccezioni.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum

from lib.flecnode import Verdict, cayley_salmon_test
from lib.incidence.counting import incidence_table
from lib.incidence.errors import ChainExhaustedError, IncidenceError
from lib.polycore import POINT_VARIABLES, square_free_part
from lib.surfaces import contains_line

logger = logging.getLogger(__name__)


def _require_surface(config):
    if config.surface is None:
        raise IncidenceError(f"config '{config.name}' has no surface")
    return config.surface


@dataclass
class ComponentAssignment:
    point_component: list
    line_component: list
    per_line_cross: list
    cross_incidences: int
    degree: int
    violations: list = field(default_factory=list)

    @property
    def cross_bound(self):
        return len(self.line_component) * self.degree

    def to_json(self):
        return {
            "point_component": self.point_component,
            "line_component": self.line_component,
            "per_line_cross": self.per_line_cross,
            "cross_incidences": self.cross_incidences,
            "cross_bound": self.cross_bound,
            "violations": self.violations,
        }


def assign_components(config):
    """
    Each point to the first factor vanishing on it, each contained line to
    the first factor containing it. An incidence is a cross-incidence when
    its point and its contained line went to different factors; a line has
    at most D of them and the whole config at most nD.
    """
    surface = _require_surface(config)
    factors = surface.factors
    points = []
    for p in config.points:
        k = next((i for i, q in enumerate(factors) if q.eval(p.coords) == 0), None)
        if k is None:
            raise IncidenceError(f"point {p} lies on no factor of {surface.f}")
        points.append(k)
    lines = []
    for line, contained in zip(config.lines, config.contained):
        k = None
        if contained:
            k = next((i for i, q in enumerate(factors) if contains_line(q, line)), None)
            if k is None:
                raise IncidenceError(f"line {line} is marked contained but lies in no factor")
        lines.append(k)
    per_line = [0] * config.n
    for i, through in enumerate(incidence_table(config)):
        for j in through:
            if lines[j] is not None and lines[j] != points[i]:
                per_line[j] += 1
    D = surface.degree
    violations = [{"line": j, "cross": c, "bound": D} for j, c in enumerate(per_line) if c > D]
    total = sum(per_line)
    if total > config.n * D:
        violations.append({"total": total, "bound": config.n * D})
    for v in violations:
        logger.warning(f"Cross-incidence bound violated: {v}")
    return ComponentAssignment(points, lines, per_line, total, D, violations)


class Tag(Enum):
    CONICAL = 1
    NON_CONICAL = 2


@dataclass
class ConicalTags:
    tags: dict
    conical_count: int
    n: int

    @property
    def within_bound(self):
        return self.conical_count <= self.n

    def is_conical(self, i, j):
        return self.tags.get((i, j)) is Tag.CONICAL

    def to_json(self):
        return {
            "conical_count": self.conical_count,
            "n": self.n,
            "within_bound": self.within_bound,
            "conical": sorted([i, j] for (i, j), t in self.tags.items() if t is Tag.CONICAL),
        }


def tag_conical(config, table=None):
    """(p, l) is conical iff p is the apex of a cone component fully containing l."""
    surface = _require_surface(config)
    apexes = [(surface.components[k].factor, apex) for k, apex in surface.cone_apexes()]
    cone_lines = {}
    for j, line in enumerate(config.lines):
        cone_lines[j] = {apex for factor, apex in apexes if contains_line(factor, line)}
    table = table if table is not None else incidence_table(config)
    tags = {}
    for i, through in enumerate(table):
        p = config.points[i]
        for j in through:
            tags[(i, j)] = Tag.CONICAL if p in cone_lines[j] else Tag.NON_CONICAL
    result = ConicalTags(tags, sum(1 for t in tags.values() if t is Tag.CONICAL), config.n)
    if not result.within_bound:
        logger.warning(f"{result.conical_count} conical incidences exceed n = {config.n}")
    return result


@dataclass
class ChainAssignment:
    variable: str
    chain: list
    point_level: list
    line_level: list
    claim_violations: list = field(default_factory=list)
    charge_violations: list = field(default_factory=list)

    def to_json(self):
        return {
            "variable": self.variable,
            "chain": [str(g) for g in self.chain],
            "point_level": self.point_level,
            "line_level": self.line_level,
            "claim_violations": self.claim_violations,
            "charge_violations": self.charge_violations,
        }


def derivative_chain(f, var):
    """f_0 = f, f_{j+1} = square-free part of d f_j / d var, while nonzero."""
    chain = [f]
    while not chain[-1].is_constant():
        d = chain[-1].partial_derivative(var)
        if d.is_zero():
            break
        chain.append(square_free_part(d))
    return chain


def _vanishes(chain, j, p):
    return j >= len(chain) or chain[j].eval(p.coords) == 0


def _contains(chain, j, line):
    return j >= len(chain) or contains_line(chain[j], line)


def derivative_chain_assign(f, config, var):
    """
    Point p goes to the first j with f_j(p) = 0 and f_{j+1}(p) != 0, line l
    to the first j with l in Z(f_j) and not in Z(f_{j+1}). Past the end of
    the chain the polynomial is zero, so nothing is assigned there.
    """
    f = (f if f is not None else _require_surface(config).f).embed(POINT_VARIABLES[config.ambient_dim])
    if var not in f.variables:
        raise IncidenceError(f"{var} is not a coordinate of {f}")
    if square_free_part(f).degree() != f.degree():
        raise IncidenceError(f"{f} is not square-free")
    chain = derivative_chain(f, var)
    logger.debug(f"Derivative chain in {var}: {[str(g) for g in chain]}")

    point_level = []
    for p in config.points:
        if f.eval(p.coords) != 0:
            raise IncidenceError(f"point {p} is not on Z({f})")
        j = next((j for j in range(len(chain)) if _vanishes(chain, j, p) and not _vanishes(chain, j + 1, p)), None)
        if j is None:
            raise ChainExhaustedError(f"chain in {var} exhausted at point {p}", p)
        point_level.append(j)
    line_level = []
    for line in config.lines:
        if not contains_line(f, line):
            raise IncidenceError(f"line {line} is not contained in Z({f})")
        j = next((j for j in range(len(chain))
                  if _contains(chain, j, line) and not _contains(chain, j + 1, line)), None)
        if j is None:
            raise ChainExhaustedError(f"chain in {var} exhausted at line {line}", line)
        line_level.append(j)

    result = ChainAssignment(var, chain, point_level, line_level)
    table = incidence_table(config)
    later = [0] * config.n
    for i, through in enumerate(table):
        for j in through:
            if point_level[i] < line_level[j]:
                result.claim_violations.append({"point": i, "line": j})
            elif point_level[i] > line_level[j]:
                later[j] += 1
    for j, count in enumerate(later):
        level = line_level[j]
        cap = chain[level + 1].degree()
        if count > cap:
            result.charge_violations.append({"line": j, "later_points": count, "bound": cap})
    if result.claim_violations or result.charge_violations:
        logger.warning(f"Derivative chain checks failed: {len(result.claim_violations)} claim, "
                       f"{len(result.charge_violations)} charge violations")
    return result


def component_is_ruled(meta, radius=None):
    """Ruledness from the metadata, falling back to the flecnode test when unknown."""
    if meta.ruled is not None:
        return meta.ruled
    if meta.is_plane or meta.generators is not None:
        return True
    kwargs = {} if radius is None else {"radius": radius}
    verdict = cayley_salmon_test(meta.factor, [meta.factor], **kwargs)[0]
    logger.info(f"Component {meta.factor}: flecnode verdict {verdict.verdict.name}")
    return verdict.verdict is Verdict.RULED_EVIDENCE


@dataclass
class LinePartition:
    L0: list
    L1: list
    component: dict
    outside: list
    reasons: dict

    def to_json(self):
        return {
            "L0": self.L0,
            "L1": self.L1,
            "component": {str(j): k for j, k in self.component.items()},
            "outside": self.outside,
            "reasons": {str(j): r for j, r in self.reasons.items()},
        }


def line_partition(config):
    """
    L0: lines in a non-ruled component, in more than one component, or
    exceptional in a singly ruled one. L1: the rest of the contained lines,
    each a generator of a unique ruled component.
    """
    surface = _require_surface(config)
    ruled = [component_is_ruled(c) for c in surface.components]
    L0, L1, outside, component, reasons = [], [], [], {}, {}
    for j, (line, contained) in enumerate(zip(config.lines, config.contained)):
        if not contained:
            outside.append(j)
            continue
        holders = [k for k, c in enumerate(surface.components) if contains_line(c.factor, line)]
        if len(holders) > 1:
            reasons[j] = "several components"
        elif not ruled[holders[0]]:
            reasons[j] = "non-ruled component"
        else:
            meta = surface.components[holders[0]]
            if meta.singly_ruled and not meta.generators.is_generator(line):
                reasons[j] = "exceptional line"
        if j in reasons:
            L0.append(j)
        else:
            L1.append(j)
            component[j] = holders[0]
    logger.debug(f"Line partition: |L0|={len(L0)}, |L1|={len(L1)}, outside {len(outside)}")
    return LinePartition(L0, L1, component, outside, reasons)
