"""Exact linear algebra over the rationals.

Elimination is done fraction-free on integer rows (cross-multiplication with
gcd reduction), and only the final back substitution produces Fractions.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def _as_rows(matrix: Iterable[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in matrix]


def _integerize(row: list[Fraction]) -> list[int]:
    den = 1
    for x in row:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints


def echelon(matrix: Iterable[Sequence], ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the nonzero echelon rows (primitive integer vectors) and the
    pivot column of each.
    """
    rows = [_integerize(r) for r in _as_rows(matrix)]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        pick = next((i for i in range(top, len(rows)) if rows[i][col] != 0), None)
        if pick is None:
            continue
        rows[top], rows[pick] = rows[pick], rows[top]
        p = rows[top]
        for i in range(top + 1, len(rows)):
            f = rows[i][col]
            if f == 0:
                continue
            new = [p[col] * a - f * b for a, b in zip(rows[i], p)]
            g = 0
            for v in new:
                g = gcd(g, v)
            rows[i] = [v // g for v in new] if g > 1 else new
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def rank(matrix: Iterable[Sequence], ncols: int | None = None) -> int:
    return len(echelon(matrix, ncols)[1])


def nullspace(matrix: Iterable[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : Mx = 0}, one vector per free column with a 1 there."""
    rows, pivots = echelon(matrix, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(reversed(rows), reversed(pivots)):
            s = sum((row[c] * x[c] for c in range(pc + 1, ncols)), Fraction(0))
            x[pc] = -s / row[pc]
        basis.append(x)
    return basis


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    bt = list(zip(*b))
    return [[sum((Fraction(x) * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def in_span(vector: Sequence, basis: Sequence[Sequence]) -> bool:
    if not basis:
        return all(v == 0 for v in vector)
    n = len(vector)
    return rank(list(basis) + [list(vector)], n) == rank(basis, n)
