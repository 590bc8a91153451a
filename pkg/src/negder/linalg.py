"""Exact rational linear algebra on lists of rows (Fractions)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [[Fraction(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                Mi, Mr = M[i], M[r]
                M[i] = [a - f * b for a, b in zip(Mi, Mr)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Basis of {x : A x = 0} for A given by its rows."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


class EchelonSpan:
    """Incrementally maintained row-echelon basis of a subspace of Q^ncols."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, list[Fraction]] = {}  # pivot column -> row with pivot 1

    def _reduce(self, v):
        v = [Fraction(x) for x in v]
        for c in sorted(self.rows):
            if v[c]:
                f = v[c]
                row = self.rows[c]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return not any(self._reduce(v))

    def add(self, v) -> bool:
        """Add v; returns False when v was already in the span."""
        v = self._reduce(v)
        piv = next((c for c, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = 1 / v[piv]
        v = [x * inv for x in v]
        for c, row in self.rows.items():
            if row[piv]:
                f = row[piv]
                self.rows[c] = [a - f * b for a, b in zip(row, v)]
        self.rows[piv] = v
        return True

    @property
    def dimension(self) -> int:
        return len(self.rows)


def in_span(vectors: Sequence[Sequence], v: Sequence, ncols: int) -> bool:
    span = EchelonSpan(ncols)
    for u in vectors:
        span.add(u)
    return span.contains(v)


def complement_basis(sub: Sequence[Sequence], whole: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Vectors of ``whole`` extending a basis of span(sub) to a basis of span(sub + whole)."""
    span = EchelonSpan(ncols)
    for s in sub:
        span.add(s)
    return [list(map(Fraction, v)) for v in whole if span.add(v)]
