# -*- coding: utf-8 -*-
"""
Risultante di Sylvester con eliminazione di Bareiss senza frazioni.

La matrice di Sylvester viene costruita sulle parti primitive intere dei
due polinomi (i contenuti razionali escono come potenze) e il
determinante è calcolato con la divisione esatta di Bareiss: ogni
quoziente intermedio è un polinomio, quindi niente funzioni razionali.
"""

import logging

from lib.polycore import kernels
from lib.polycore.errors import PolynomialError
from lib.polycore.multipoly import MultiPoly

logger = logging.getLogger(__name__)


class BareissError(ArithmeticError):
    """A Bareiss step produced a non-exact division (internal bug)."""


def _coefficient_rows(poly, var):
    """Integer coefficient dicts of poly.ints in var, highest power first."""
    n = poly.nvars
    i = poly.index_of(var)
    sh = kernels.shift_of(n, i)
    buckets = {}
    for m, c in poly.ints.items():
        e = (m >> sh) & kernels.FIELD_MASK
        buckets.setdefault(e, {})[m - (e << sh)] = c
    top = max(buckets)
    return [buckets.get(k, {}) for k in range(top, -1, -1)]


def sylvester_matrix(f, g, var):
    """Sylvester matrix of the integer parts of f and g as nested lists of packed dicts."""
    a = _coefficient_rows(f, var)
    b = _coefficient_rows(g, var)
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for k in range(n):
        rows.append([{}] * k + a + [{}] * (size - k - len(a)))
    for k in range(m):
        rows.append([{}] * k + b + [{}] * (size - k - len(b)))
    return rows


def bareiss_determinant(matrix):
    """Determinant of a square matrix of packed integer polynomials."""
    rows = [list(r) for r in matrix]
    size = len(rows)
    if size == 0:
        return {0: 1}
    sign = 1
    prev = {0: 1}
    for k in range(size - 1):
        if not rows[k][k]:
            pivot = next((i for i in range(k + 1, size) if rows[i][k]), None)
            if pivot is None:
                return {}
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        pivot_entry = rows[k][k]
        for i in range(k + 1, size):
            row_i = rows[i]
            lead = row_i[k]
            for j in range(k + 1, size):
                num = kernels.mul(row_i[j], pivot_entry)
                if lead and rows[k][j]:
                    num = kernels.sub(num, kernels.mul(lead, rows[k][j]))
                if prev == {0: 1}:
                    row_i[j] = num
                else:
                    q = kernels.divide_exact(num, prev)
                    if q is None:
                        raise BareissError(f"non-exact Bareiss division at step {k}")
                    row_i[j] = q
            row_i[k] = {}
        prev = pivot_entry
    det = rows[size - 1][size - 1]
    return kernels.neg(det) if sign < 0 else det


def sylvester_resultant(f, g, var):
    """Res_var(f, g) as the exact determinant of the Sylvester matrix."""
    if f.is_zero() or g.is_zero():
        raise PolynomialError("resultant of a zero polynomial")
    f, g = f.aligned(g)
    f.index_of(var)
    m, n = f.degree_in(var), g.degree_in(var)
    if m <= 0 or n <= 0:
        raise PolynomialError(f"resultant needs positive degree in {var} (got {m}, {n})")
    det = bareiss_determinant(sylvester_matrix(f, g, var))
    result = MultiPoly.from_ints(f.variables, f.scalar ** n * g.scalar ** m, det)
    logger.debug(f"Res_{var}: degrees {m}, {n} -> {result.degree()} ({len(result.ints)} terms)")
    return result
