"""Random quasihomogeneous systems for property tests and consistency sweeps."""

from __future__ import annotations

import math
import random
from functools import reduce
from itertools import combinations_with_replacement, product
from typing import Iterator, Sequence

from .derivations import jacobian_minors
from .groebner import GroebnerBudgetExceeded, groebner_basis, is_zero_dimensional
from .poly import Polynomial, monomials_of_degree
from .singularity import (
    SingularitySystem,
    ValidationError,
    condition_A,
    condition_B,
    is_complete_intersection,
    lemma12_check,
    validate_system,
)


def weight_grid(n: int, max_weight: int) -> list[tuple[int, ...]]:
    """Non-increasing weight vectors with entries <= max_weight and gcd 1."""
    out = []
    for combo in combinations_with_replacement(range(max_weight, 0, -1), n):
        if reduce(math.gcd, combo) == 1:
            out.append(tuple(combo))
    return out


def random_coefficient(rng: random.Random, bound: int = 5) -> int:
    c = 0
    while c == 0:
        c = rng.randint(-bound, bound)
    return c


def random_homogeneous(
    rng: random.Random,
    weights: Sequence[int],
    degree: int,
    min_order: int = 2,
    density: float = 1.0,
    keep_pure_powers: bool = True,
    bound: int = 5,
) -> Polynomial:
    """Random weighted-homogeneous polynomial; zero if no admissible monomial exists."""
    n = len(weights)
    monos = [e for e in monomials_of_degree(weights, degree) if sum(e) >= min_order]
    terms = {}
    for e in monos:
        pure = sum(1 for a in e if a) == 1
        if (keep_pure_powers and pure) or rng.random() < density:
            terms[e] = random_coefficient(rng, bound)
    return Polynomial(terms, n)


def random_system(
    rng: random.Random,
    weights: Sequence[int],
    degrees: Sequence[int],
    min_order: int = 2,
    density: float = 1.0,
) -> SingularitySystem | None:
    g = [random_homogeneous(rng, weights, p, min_order, density) for p in degrees]
    if any(gi.is_zero() for gi in g):
        return None
    try:
        return validate_system(g, weights)
    except ValidationError:
        return None


def targeted_equation(
    rng: random.Random,
    weights: Sequence[int],
    degree: int,
    min_order: int = 2,
    extra: int = 2,
    bound: int = 3,
) -> Polynomial:
    """Homogeneous equation carrying, for each variable x_k, a pure power or some x_k^m x_nu.

    Those monomials are what isolatedness needs (one of them per variable in
    some equation), so such equations are far more often isolated than
    uniformly random ones. ``extra`` further random monomials are added.
    """
    n = len(weights)
    monos = [e for e in monomials_of_degree(weights, degree) if sum(e) >= min_order]
    terms = {}
    for k in range(n):
        pure = [e for e in monos if e[k] and sum(e) == e[k]]
        mixed = [
            e for e in monos
            if e[k] and sum(1 for a in e if a) == 2 and sum(e) - e[k] == 1
        ]
        choice = pure or mixed
        if choice:
            terms[rng.choice(choice)] = random_coefficient(rng, bound)
    others = [e for e in monos if e not in terms]
    for e in rng.sample(others, min(extra, len(others))):
        terms[e] = random_coefficient(rng, bound)
    return Polynomial(terms, n)


def admissible_degrees(weights: Sequence[int], min_order: int, max_degree: int) -> list[int]:
    """Degrees with at least one pure power of the heaviest variable and some monomial of the given order."""
    out = []
    for p in range(min_order * min(weights), max_degree + 1):
        monos = [e for e in monomials_of_degree(weights, p) if sum(e) >= min_order]
        if monos:
            out.append(p)
    return out


def random_normal_icis(
    rng: random.Random,
    n: int,
    t: int,
    weights: Sequence[int],
    min_order: int = 2,
    max_degree: int = 12,
    attempts: int = 20,
    extra: int = 2,
    budget: int = 20000,
    prefilter: bool = True,
) -> SingularitySystem | None:
    """Sample targeted equations of random admissible degrees until a normal ICIS appears.

    With ``prefilter`` candidates failing the cheap necessary conditions (A(k)
    or B(k) for all k, and the degree inequalities) are skipped before any
    Groebner work; switch it off when those conditions are what is being
    tested. The isolatedness computation runs under ``budget`` and
    over-budget samples are discarded.
    """
    degrees_pool = admissible_degrees(weights, min_order, max_degree)
    if not degrees_pool:
        return None
    for _ in range(attempts):
        degrees = sorted((rng.choice(degrees_pool) for _ in range(t)), reverse=True)
        g = [targeted_equation(rng, weights, p, min_order, extra) for p in degrees]
        if any(gi.is_zero() for gi in g):
            continue
        try:
            s = validate_system(g, weights)
        except ValidationError:
            continue
        if prefilter and not passes_necessary_conditions(s):
            continue
        try:
            if is_normal_icis_within(s, budget):
                return s
        except GroebnerBudgetExceeded:
            continue
    return None


def passes_necessary_conditions(s: SingularitySystem) -> bool:
    return all(lemma12_check(s)) and all(
        condition_A(s, k) or condition_B(s, k) for k in range(1, s.n + 1)
    )


def is_isolated_within(s: SingularitySystem, budget: int) -> bool:
    """is_isolated with a reduction-step budget; raises GroebnerBudgetExceeded."""
    minors = [m for m in jacobian_minors(s.g) if not m.is_zero()]
    gb = groebner_basis(list(s.g) + minors, s.order(), budget=budget, stop_when_zero_dimensional=True)
    return not gb.is_unit() and is_zero_dimensional(gb)


def is_normal_icis_within(s: SingularitySystem, budget: int) -> bool:
    """is_normal_icis with a reduction-step budget for the isolatedness basis."""
    if s.d < 2 or not is_complete_intersection(s):
        return False
    return is_isolated_within(s, budget)


def sparse_support_system(
    rng: random.Random,
    n: int,
    sizes: Sequence[int],
    max_order: int = 5,
) -> list[Polynomial]:
    """Equations with few monomials of the shapes x_k^m and x_k^m x_j.

    Nothing is homogeneous by construction; the point is that few monomials
    leave a weight cone of dimension at least n - sum(sizes) + len(sizes).
    """
    monos = [
        e for e in product(range(max_order + 1), repeat=n)
        if 2 <= sum(e) <= max_order
        and (sum(1 for a in e if a) == 1 or (sum(1 for a in e if a) == 2 and min(a for a in e if a) == 1))
    ]
    return [
        Polynomial({e: random_coefficient(rng, 3) for e in rng.sample(monos, size)}, n)
        for size in sizes
    ]


def normal_icis_stream(
    seed: int,
    shapes: Sequence[tuple[int, int]],
    max_weight: int,
    min_order: int = 2,
    max_degree: int = 12,
    budget: int = 3000,
    prefilter: bool = False,
) -> Iterator[SingularitySystem]:
    """Endless reproducible stream of random normal ICIS.

    ``shapes`` lists the admissible (n, t); each draw picks a shape, a weight
    vector from the grid and a number of extra monomials in {0, 1}.
    """
    rng = random.Random(seed)
    grids = {n: weight_grid(n, max_weight) for n, _ in shapes}
    while True:
        n, t = rng.choice(list(shapes))
        w = rng.choice(grids[n])
        s = random_normal_icis(
            rng, n, t, w, min_order, max_degree,
            attempts=3, extra=rng.randint(0, 1), budget=budget, prefilter=prefilter,
        )
        if s is not None:
            yield s
