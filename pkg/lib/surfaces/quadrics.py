# -*- coding: utf-8 -*-
"""
Quadriche: classificazione reale per congruenza esatta e regolo per tre
rette sghembe.
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from lib.geometry import AffPoint, lines_coplanar, nullspace
from lib.geometry.linalg import solve
from lib.polycore import POINT_VARIABLES, MultiPoly, square_free_part
from lib.surfaces.errors import DegenerateQuadricError, SurfaceError
from lib.surfaces.local import contains_line

logger = logging.getLogger(__name__)

REGULUS_PARAMETERS = (0, 1, -1)


class QuadricType(Enum):
    PLANE_PAIR = 1
    REGULUS = 2
    NON_REGULUS_RULED = 3
    NO_REAL_LINES = 4
    CONE = 5


@dataclass
class QuadricClassification:
    kind: QuadricType
    rank: int
    signature: tuple
    affine_rank: int
    affine_signature: tuple
    apex: AffPoint = None
    detail: str = ""
    # False quando le componenti lineari sono complesse coniugate
    real: bool = True

    def to_json(self):
        return {
            "kind": self.kind.name,
            "rank": self.rank,
            "signature": list(self.signature),
            "affine_rank": self.affine_rank,
            "affine_signature": list(self.affine_signature),
            "apex": self.apex.to_json() if self.apex is not None else None,
            "detail": self.detail,
            "real": self.real,
        }


def quadric_matrix(f):
    """Symmetric 4x4 matrix of f in the homogeneous coordinates (1, x, y, z)."""
    f = f.embed(POINT_VARIABLES[3])
    if f.degree() != 2:
        raise SurfaceError(f"{f} is not a quadric")
    m = [[Fraction(0)] * 4 for _ in range(4)]
    for exps, c in f.terms.items():
        idx = [i + 1 for i, e in enumerate(exps) for _ in range(e)]
        idx += [0] * (2 - len(idx))
        i, j = idx
        if i == j:
            m[i][i] += c
        else:
            m[i][j] += c / 2
            m[j][i] += c / 2
    return m


def congruence_diagonal(matrix):
    """Diagonal of a matrix congruent to the symmetric input (P^T M P), by exact elimination."""
    m = [list(r) for r in matrix]
    n = len(m)
    diagonal = []
    for k in range(n):
        if m[k][k] == 0:
            j = next((j for j in range(k + 1, n) if m[j][j] != 0), None)
            if j is not None:
                m[k], m[j] = m[j], m[k]
                for row in m:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if j is not None:
                    # row/column k += row/column j
                    for c in range(n):
                        m[k][c] += m[j][c]
                    for r in range(n):
                        m[r][k] += m[r][j]
        pivot = m[k][k]
        diagonal.append(pivot)
        if pivot == 0:
            continue
        for i in range(k + 1, n):
            factor = m[i][k] / pivot
            if factor:
                for c in range(k, n):
                    m[i][c] -= factor * m[k][c]
                for r in range(k, n):
                    m[r][i] -= factor * m[r][k]
    return diagonal


def _rank_signature(matrix):
    diagonal = congruence_diagonal(matrix)
    pos = sum(1 for d in diagonal if d > 0)
    neg = sum(1 for d in diagonal if d < 0)
    return pos + neg, (pos, neg)


def _solve_centre(m):
    """Point where the gradient of the quadric vanishes (affine block invertible)."""
    a = [[m[i][j] for j in range(1, 4)] for i in range(1, 4)]
    b = [-m[i][0] for i in range(1, 4)]
    columns = [[a[r][c] for r in range(3)] for c in range(3)]
    return AffPoint(solve(columns, b))


def classify_quadric(f):
    """Real affine type of a square-free quadric from rank and signature of its matrices."""
    f = f.embed(POINT_VARIABLES[3])
    if f.degree() != 2:
        raise SurfaceError(f"classify_quadric needs degree 2 (got {f.degree()})")
    if square_free_part(f).degree() != 2:
        raise DegenerateQuadricError(f"{f} is a double plane")
    m = quadric_matrix(f)
    rank, signature = _rank_signature(m)
    a_rank, a_signature = _rank_signature([row[1:] for row in m[1:]])
    definite = 0 in signature

    def result(kind, detail="", apex=None, real=True):
        logger.debug(f"{f}: rank {rank} signature {signature}, affine {a_rank} {a_signature} -> {kind.name}")
        return QuadricClassification(kind, rank, signature, a_rank, a_signature, apex, detail, real)

    if rank == 4:
        if signature == (2, 2):
            return result(QuadricType.REGULUS, "doubly ruled")
        return result(QuadricType.NO_REAL_LINES, "non-degenerate with signature " + str(signature))
    if rank == 3:
        if a_rank == 3:
            apex = _solve_centre(m)
            if definite:
                return result(QuadricType.NO_REAL_LINES, "imaginary cone, one real point", apex)
            return result(QuadricType.CONE, "real cone", apex)
        if definite and a_rank == 2:
            return result(QuadricType.NO_REAL_LINES, "imaginary cylinder")
        return result(QuadricType.NON_REGULUS_RULED, "cylinder over a conic")
    if rank == 2:
        if not definite:
            return result(QuadricType.PLANE_PAIR, "real planes")
        if a_rank == 2:
            return result(QuadricType.PLANE_PAIR, "conjugate imaginary planes meeting in a real line", real=False)
        return result(QuadricType.NO_REAL_LINES, "parallel imaginary planes")
    raise DegenerateQuadricError(f"{f} has rank {rank}")


def _quadric_monomials():
    return [e for e in itertools.product(range(3), repeat=3) if sum(e) <= 2]


def regulus_through(l1, l2, l3):
    """The quadric through three pairwise skew lines, normalized to grlex leading coefficient 1."""
    lines = (l1, l2, l3)
    if any(l.dim != 3 for l in lines):
        raise SurfaceError("reguli are built in dimension 3")
    for a, b in itertools.combinations(lines, 2):
        if lines_coplanar(a, b):
            raise SurfaceError(f"lines {a} and {b} are coplanar")
    monomials = _quadric_monomials()
    rows = []
    for line in lines:
        for t in REGULUS_PARAMETERS:
            p = line.point_at(t).coords
            rows.append([p[0] ** e[0] * p[1] ** e[1] * p[2] ** e[2] for e in monomials])
    kernel = nullspace(rows)
    if len(kernel) != 1:
        raise DegenerateQuadricError(f"solution space of dimension {len(kernel)}")
    q = MultiPoly(POINT_VARIABLES[3], dict(zip(monomials, kernel[0])))
    for line in lines:
        if not contains_line(q, line):
            raise ArithmeticError(f"regulus {q} misses {line}")
    return q.monic()
