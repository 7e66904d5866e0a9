# -*- coding: utf-8 -*-
"""Riduzione a scala esatta sui razionali."""

from fractions import Fraction


def rref(rows):
    """
    Reduced row echelon form of a list of rational vectors.

    Returns (nonzero reduced rows, pivot columns).
    """
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return [], []
    width = len(m[0])
    pivots = []
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][col]
        m[r] = [v / lead for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, width=None):
    """Basis of {x : rows . x = 0}, one vector per free column."""
    if not rows:
        width = width or 0
        return [tuple(Fraction(int(i == j)) for j in range(width)) for i in range(width)]
    width = len(rows[0])
    reduced, pivots = rref(rows)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * width
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(tuple(vec))
    return basis


def solve(columns, rhs):
    """
    Unique solution of sum_k x_k * columns[k] = rhs, or None.

    None when the system is inconsistent; raises ValueError when the
    solution is not unique.
    """
    n = len(rhs)
    augmented = [[columns[k][i] for k in range(len(columns))] + [rhs[i]] for i in range(n)]
    reduced, pivots = rref(augmented)
    unknowns = len(columns)
    if unknowns in pivots:
        return None
    if len(pivots) < unknowns:
        raise ValueError("system does not have a unique solution")
    return tuple(row[-1] for row in reduced)


def dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def scale(a, c):
    return tuple(c * x for x in a)
