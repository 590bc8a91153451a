"""Polynomial vector fields sum(q_i d/dx_i): Euler and trivial derivations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .poly import (
    INHOMOGENEOUS,
    Polynomial,
    PolynomialError,
    WeightSystem,
    default_variables,
    determinant,
    parse_polynomial,
    partial_derivative,
    render,
    weighted_degree,
)


@dataclass(frozen=True)
class Derivation:
    """The derivation sum_i coefficients[i] * d/dx_{i+1}."""

    coefficients: tuple[Polynomial, ...]
    weights: WeightSystem | None = None

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if not coeffs:
            raise ValueError("a derivation needs at least one coefficient")
        n = coeffs[0].nvars
        if len(coeffs) != n or any(q.nvars != n for q in coeffs):
            raise ValueError("need exactly one coefficient per variable of the ambient ring")
        if self.weights is not None and len(self.weights) != n:
            raise ValueError("weight count does not match variable count")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, i: int) -> Polynomial:
        """1-based access to the coefficient of d/dx_i."""
        return self.coefficients[i - 1]

    def is_zero(self) -> bool:
        return all(q.is_zero() for q in self.coefficients)

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)), self.weights)

    def __neg__(self):
        return Derivation(tuple(-q for q in self.coefficients), self.weights)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f) -> "Derivation":
        return Derivation(tuple(q * f for q in self.coefficients), self.weights)

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply(self, p)

    def render(self, variables: Sequence[str] | None = None) -> list[str]:
        """Coefficient vector as text, one polynomial per variable."""
        return [render(q, variables) for q in self.coefficients]

    def __str__(self):
        names = default_variables(self.nvars)
        parts = [
            f"({render(q)})*d{name}"
            for q, name in zip(self.coefficients, names)
            if not q.is_zero()
        ]
        return " + ".join(parts) if parts else "0"

    @classmethod
    def from_text(cls, texts: Sequence[str], variables, weights=None) -> "Derivation":
        return cls(tuple(parse_polynomial(t, variables) for t in texts), weights)


def apply(d: Derivation, p: Polynomial) -> Polynomial:
    if p.nvars != d.nvars:
        raise PolynomialError("derivation and polynomial live in different rings")
    total = Polynomial.zero(p.nvars)
    for i, q in enumerate(d.coefficients, start=1):
        if q.is_zero():
            continue
        dp = partial_derivative(p, i)
        if not dp.is_zero():
            total = total + q * dp
    return total


def euler(w: WeightSystem) -> Derivation:
    n = len(w)
    coeffs = tuple(Polynomial.variable(i, n) * w[i - 1] for i in range(1, n + 1))
    return Derivation(coeffs, w)


def jacobian_matrix(g: Sequence[Polynomial]) -> list[list[Polynomial]]:
    """Rows indexed by equations, columns by variables."""
    return [[partial_derivative(gi, i) for i in range(1, gi.nvars + 1)] for gi in g]


def _check_indices(nu: Sequence[int], n: int):
    if any(not 1 <= i <= n for i in nu):
        raise IndexError(f"index set {tuple(nu)} out of range 1..{n}")
    if any(a >= b for a, b in zip(nu, nu[1:])):
        raise ValueError(f"index set {tuple(nu)} must be strictly increasing")


def trivial_derivation(
    g: Sequence[Polynomial], nu: Sequence[int], weights: WeightSystem | None = None
) -> Derivation:
    """The determinant derivation for the columns ``nu`` (length t+1, 1-based).

    The determinant is expanded along its first row of symbols d/dx_nu; the
    coefficient of d/dx_{nu_j} is (-1)^j times the t x t minor of the Jacobian
    columns nu with nu_j deleted.
    """
    g = list(g)
    t = len(g)
    n = g[0].nvars
    nu = tuple(nu)
    if len(nu) != t + 1:
        raise ValueError(f"need {t + 1} indices for {t} equations, got {len(nu)}")
    _check_indices(nu, n)
    J = [[partial_derivative(gk, i) for i in nu] for gk in g]
    coeffs = [Polynomial.zero(n) for _ in range(n)]
    for j, col in enumerate(nu):
        minor = [row[:j] + row[j + 1 :] for row in J]
        m = determinant(minor) if t else Polynomial.constant(1, n)
        coeffs[col - 1] = m if j % 2 == 0 else -m
    return Derivation(tuple(coeffs), weights)


def trivial_derivations(g: Sequence[Polynomial], weights: WeightSystem | None = None):
    """All (nu, delta_nu) for increasing nu of length t+1, in lexicographic order."""
    n = g[0].nvars
    t = len(g)
    index_sets = (tuple(i + 1 for i in c) for c in combinations(range(n), t + 1))
    return [(nu, trivial_derivation(g, nu, weights)) for nu in index_sets]


def generator_count(n: int, t: int) -> int:
    """Minimal number of generators of the derivation module of a normal ICIS."""
    return math.comb(n, t + 1) + 1


def derivation_degree(d: Derivation, weights: WeightSystem | Sequence[int] | None = None):
    """Common value of deg(q_i) - w_i over nonzero coefficients, or INHOMOGENEOUS."""
    w = weights if weights is not None else d.weights
    if w is None:
        raise ValueError("derivation degree needs a weight system")
    w = tuple(w)
    if d.is_zero():
        raise PolynomialError("the zero derivation has no degree")
    degrees = set()
    for q, wi in zip(d.coefficients, w):
        if q.is_zero():
            continue
        dq = weighted_degree(q, w)
        if dq == INHOMOGENEOUS:
            return INHOMOGENEOUS
        degrees.add(dq - wi)
    if len(degrees) != 1:
        return INHOMOGENEOUS
    return degrees.pop()


def jacobian_minors(g: Sequence[Polynomial]) -> list[Polynomial]:
    """All maximal minors of the Jacobian matrix, columns in lexicographic order."""
    return [m for _, m in jacobian_minors_indexed(g)]


def jacobian_minors_indexed(g: Sequence[Polynomial]) -> list[tuple[tuple[int, ...], Polynomial]]:
    g = list(g)
    t = len(g)
    n = g[0].nvars
    if t > n:
        raise ValueError(f"{t} equations exceed {n} variables")
    J = jacobian_matrix(g)
    out = []
    for cols in combinations(range(n), t):
        M = [[row[c] for c in cols] for row in J]
        out.append((tuple(c + 1 for c in cols), determinant(M)))
    return out
