"""Quasihomogeneous presentations P/<g_1, ..., g_t> and their basic invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations
from typing import Sequence

from .derivations import jacobian_minors
from .groebner import (
    GroebnerBasis,
    MonomialOrder,
    groebner_basis,
    is_zero_dimensional,
    krull_dimension,
    pure_powers,
)
from .linalg import nullspace
from .poly import (
    INHOMOGENEOUS,
    Polynomial,
    WeightSystem,
    default_variables,
    order_of,
    render,
    weighted_degree,
)


class ValidationError(ValueError):
    pass


class InhomogeneousGeneratorError(ValidationError):
    def __init__(self, index: int, degrees: dict):
        self.index = index
        self.degrees = degrees
        detail = "; ".join(f"degree {d}: {', '.join(ms)}" for d, ms in sorted(degrees.items()))
        super().__init__(f"equation {index} is not weighted homogeneous ({detail})")


class EmbeddingDimensionError(ValidationError):
    """A generator of order <= 1: the presentation does not have minimal embedding dimension."""


@dataclass(frozen=True)
class SingularitySystem:
    """Validated presentation with variables sorted by weight and equations by degree.

    ``variable_permutation[i]`` is the original (0-based) position of sorted
    variable i; likewise ``equation_permutation`` for the equations.
    """

    g: tuple[Polynomial, ...]
    w: WeightSystem
    p: tuple[int, ...]
    variables: tuple[str, ...]
    variable_permutation: tuple[int, ...]
    equation_permutation: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def t(self) -> int:
        return len(self.g)

    @property
    def d(self) -> int:
        return self.n - self.t

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(order_of(gi) for gi in self.g)

    def equations_text(self) -> list[str]:
        return [render(gi, self.variables) for gi in self.g]

    def with_equations(self, g: Sequence[Polynomial]) -> "SingularitySystem":
        """Same grading and bookkeeping, new (homogeneous, same-degree) equations."""
        return SingularitySystem(
            tuple(g), self.w, self.p, self.variables, self.variable_permutation, self.equation_permutation
        )

    def order(self) -> MonomialOrder:
        return MonomialOrder.weighted(self.w.weights)


@dataclass(frozen=True)
class ConditionWitness:
    """Evidence for condition A(k) (a pure power x_k^m in g_j) or B(k).

    For B(k): ``nu[j-1]`` and ``exponents[j-1]`` describe the monomial
    x_k^{m_j} x_{nu_j} found in g_j. All indices are 1-based.
    """

    k: int
    kind: str
    m: int | None = None
    j: int | None = None
    nu: tuple[int, ...] | None = None
    exponents: tuple[int, ...] | None = None

    def as_dict(self) -> dict:
        if self.kind == "A":
            return {"k": self.k, "kind": "A", "m": self.m, "j": self.j}
        return {"k": self.k, "kind": "B", "nu": list(self.nu), "m": list(self.exponents)}


def _permute(p: Polynomial, perm: Sequence[int]) -> Polynomial:
    return Polynomial({tuple(e[i] for i in perm): c for e, c in p.items()}, p.nvars)


def validate_system(
    g: Sequence[Polynomial],
    w: WeightSystem | Sequence[int],
    variables: Sequence[str] | None = None,
) -> SingularitySystem:
    g = list(g)
    if not g:
        raise ValidationError("need at least one equation")
    n = g[0].nvars
    if any(gi.nvars != n for gi in g):
        raise ValidationError("equations live in different rings")
    try:
        w = w if isinstance(w, WeightSystem) else WeightSystem(tuple(w))
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    if len(w) != n:
        raise ValidationError(f"{len(w)} weights for {n} variables")
    if len(g) > n:
        raise ValidationError(f"{len(g)} equations exceed {n} variables")
    variables = tuple(variables) if variables is not None else tuple(default_variables(n))

    degrees = []
    for idx, gi in enumerate(g, start=1):
        if gi.is_zero():
            raise ValidationError(f"equation {idx} is zero")
        deg = weighted_degree(gi, w)
        if deg == INHOMOGENEOUS:
            by_degree: dict[int, list[str]] = {}
            for e in gi.monomials():
                mono = render(Polynomial.monomial(e), variables)
                by_degree.setdefault(w.degree(e), []).append(mono)
            raise InhomogeneousGeneratorError(idx, by_degree)
        if order_of(gi) <= 1:
            raise EmbeddingDimensionError(
                f"equation {idx} has order {order_of(gi)}; the embedding dimension is not minimal"
            )
        degrees.append(deg)

    var_perm = tuple(sorted(range(n), key=lambda i: -w[i]))
    eq_perm = tuple(sorted(range(len(g)), key=lambda j: -degrees[j]))
    sorted_g = tuple(_permute(g[j], var_perm) for j in eq_perm)
    return SingularitySystem(
        g=sorted_g,
        w=WeightSystem(tuple(w[i] for i in var_perm)),
        p=tuple(degrees[j] for j in eq_perm),
        variables=tuple(variables[i] for i in var_perm),
        variable_permutation=var_perm,
        equation_permutation=eq_perm,
    )


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


# -- weight inference -------------------------------------------------------------


def _homogeneity_constraints(g: Sequence[Polynomial]) -> list[list[int]]:
    rows = []
    for gi in g:
        monos = gi.monomials()
        for e in monos[1:]:
            rows.append([a - b for a, b in zip(e, monos[0])])
    return rows


def _primitive_integer(v: Sequence[Fraction]) -> tuple[int, ...]:
    den = reduce(math.lcm, (Fraction(x).denominator for x in v), 1)
    ints = [int(Fraction(x) * den) for x in v]
    gcd = reduce(math.gcd, ints)
    return tuple(x // gcd for x in ints) if gcd else tuple(ints)


def weight_cone_rays(g: Sequence[Polynomial]) -> list[tuple[int, ...]]:
    """Extreme rays of {w >= 0 : every g_i is w-homogeneous}, as primitive integer vectors."""
    n = g[0].nvars
    rows = _homogeneity_constraints(g)
    basis = nullspace(rows, n) if rows else nullspace([], n)
    r = len(basis)
    if r == 0:
        return []
    rays: list[tuple[int, ...]] = []
    for zeros in combinations(range(n), r - 1):
        extra = [[int(i == z) for i in range(n)] for z in zeros]
        sol = nullspace(rows + extra, n)
        if len(sol) != 1:
            continue
        v = sol[0]
        if all(x >= 0 for x in v):
            ray = _primitive_integer(v)
        elif all(x <= 0 for x in v):
            ray = _primitive_integer([-x for x in v])
        else:
            continue
        if ray not in rays:
            rays.append(ray)
    return sorted(rays, reverse=True)


def infer_weights(g: Sequence[Polynomial]) -> list[WeightSystem]:
    """Positive gradings making every g_i homogeneous.

    Returns the strictly positive extreme rays of the weight cone, followed by
    one interior point (the normalized sum of all rays) when the cone is not a
    single ray. Empty when no positive grading exists.
    """
    rays = weight_cone_rays(g)
    if not rays:
        return []
    total = [sum(col) for col in zip(*rays)]
    if any(x <= 0 for x in total):
        return []
    out = [WeightSystem(ray) for ray in rays if all(x > 0 for x in ray)]
    if len(rays) > 1:
        interior = WeightSystem(_primitive_integer(total))
        if interior not in out:
            out.append(interior)
    return out


def cone_probes(g: Sequence[Polynomial]) -> list[WeightSystem]:
    """infer_weights plus the interior points sum(rays) + ray_i, one per ray."""
    probes = infer_weights(g)
    rays = weight_cone_rays(g)
    if len(rays) > 1 and probes:
        total = [sum(col) for col in zip(*rays)]
        for ray in rays:
            w = WeightSystem(_primitive_integer([a + b for a, b in zip(total, ray)]))
            if w not in probes:
                probes.append(w)
    return probes


# -- complete intersection and isolatedness --------------------------------------


@lru_cache(maxsize=512)
def ideal_basis(s: SingularitySystem) -> GroebnerBasis:
    """Groebner basis of <g> in the weighted degree reverse lexicographic order."""
    return groebner_basis(list(s.g), s.order())


@dataclass(frozen=True)
class IsolatednessCertificate:
    isolated: bool
    pure_powers: dict = field(default_factory=dict)
    basis_size: int = 0
    steps: int = 0

    def __bool__(self):
        return self.isolated


@lru_cache(maxsize=512)
def is_isolated(s: SingularitySystem) -> IsolatednessCertificate:
    """Zero-dimensionality of <g> + maximal Jacobian minors (m-primary in the graded case)."""
    minors = [m for m in jacobian_minors(s.g) if not m.is_zero()]
    gb = groebner_basis(list(s.g) + minors, s.order(), stop_when_zero_dimensional=True)
    powers = pure_powers(gb)
    return IsolatednessCertificate(
        isolated=not gb.is_unit() and is_zero_dimensional(gb),
        pure_powers=powers,
        basis_size=len(gb),
        steps=gb.steps,
    )


def dimension(s: SingularitySystem) -> int:
    return krull_dimension(ideal_basis(s))


def is_complete_intersection(s: SingularitySystem) -> bool:
    return dimension(s) == s.n - s.t


def is_normal_icis(s: SingularitySystem) -> bool:
    return s.d >= 2 and is_complete_intersection(s) and bool(is_isolated(s))


# -- conditions A(k), B(k) and the numerical constraint ------------------------------


def _check_k(s: SingularitySystem, k: int):
    if not 1 <= k <= s.n:
        raise IndexError(f"variable index {k} out of range 1..{s.n}")


def condition_A(s: SingularitySystem, k: int) -> ConditionWitness | None:
    """Pure power x_k^m (m >= 2) in some g_j; smallest j, then smallest m."""
    _check_k(s, k)
    for j, gj in enumerate(s.g, start=1):
        powers = [
            e[k - 1]
            for e, _ in gj.items()
            if e[k - 1] >= 2 and sum(e) == e[k - 1]
        ]
        if powers:
            return ConditionWitness(k, "A", m=min(powers), j=j)
    return None


def _b_candidates(s: SingularitySystem, k: int) -> list[dict[int, int]]:
    """Per equation: admissible nu -> smallest m with x_k^m x_nu in g_j."""
    out = []
    for gj in s.g:
        cand: dict[int, int] = {}
        for e, _ in gj.items():
            m = e[k - 1]
            if m < 1:
                continue
            rest = [(i, a) for i, a in enumerate(e) if i != k - 1 and a]
            if len(rest) == 1 and rest[0][1] == 1:
                nu = rest[0][0] + 1
                cand[nu] = min(cand.get(nu, m), m)
        out.append(cand)
    return out


def condition_B(s: SingularitySystem, k: int) -> ConditionWitness | None:
    """Distinct nu_1..nu_t with x_k^{m_j} x_{nu_j} in g_j, found by bipartite matching."""
    _check_k(s, k)
    cands = _b_candidates(s, k)
    match_of_nu: dict[int, int] = {}

    def augment(j, seen):
        for nu in sorted(cands[j]):
            if nu in seen:
                continue
            seen.add(nu)
            if nu not in match_of_nu or augment(match_of_nu[nu], seen):
                match_of_nu[nu] = j
                return True
        return False

    for j in range(s.t):
        if not augment(j, set()):
            return None
    nu_of_eq = {j: nu for nu, j in match_of_nu.items()}
    nus = tuple(nu_of_eq[j] for j in range(s.t))
    ms = tuple(cands[j][nus[j]] for j in range(s.t))
    return ConditionWitness(k, "B", nu=nus, exponents=ms)


def conditions_table(s: SingularitySystem) -> list[dict]:
    rows = []
    for k in range(1, s.n + 1):
        a, b = condition_A(s, k), condition_B(s, k)
        rows.append(
            {
                "k": k,
                "A": a.as_dict() if a else None,
                "B": b.as_dict() if b else None,
            }
        )
    return rows


def lemma12_check(s: SingularitySystem) -> list[bool]:
    """For j = 1..t: p_1 + ... + p_j >= w_1 + ... + w_j + j."""
    out = []
    for j in range(1, s.t + 1):
        out.append(sum(s.p[:j]) >= sum(s.w.weights[:j]) + j)
    return out
