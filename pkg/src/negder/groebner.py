"""Buchberger's algorithm over Q with Gebauer-Moeller pair elimination.

Reduction during the completion runs fraction-free on content-free integer
polynomials; normal forms are computed over Q so that they are unique and
linear in the input.
"""

from __future__ import annotations

import heapq
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Sequence

from .poly import Exponent, Polynomial

DEFAULT_BUDGET = 10**6


class GroebnerBudgetExceeded(RuntimeError):
    """Raised when a computation needs more reduction steps than allowed."""


class UnitIdealError(ValueError):
    pass


def default_budget() -> int:
    """Step cap for Groebner computations; NEGDER_GB_BUDGET overrides the default."""
    value = os.environ.get("NEGDER_GB_BUDGET", "").strip()
    if not value:
        return DEFAULT_BUDGET
    try:
        budget = int(value)
    except ValueError:
        budget = 0
    if budget <= 0:
        raise ValueError(f"NEGDER_GB_BUDGET must be a positive integer, got {value!r}")
    return budget


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "degrevlex"
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "wdegrevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "wdegrevlex":
            if not self.weights or any(w <= 0 for w in self.weights):
                raise ValueError("weighted order needs positive weights")
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    @classmethod
    def weighted(cls, weights) -> "MonomialOrder":
        return cls("wdegrevlex", tuple(weights))

    def key(self, exp: Exponent):
        """Sort key: a larger key means a larger monomial."""
        if self.kind == "lex":
            return exp
        rev = tuple(-e for e in reversed(exp))
        if self.kind == "degrevlex":
            return (sum(exp),) + rev
        return (sum(w * e for w, e in zip(self.weights, exp)),) + rev

    def __str__(self):
        if self.kind == "wdegrevlex":
            return f"wdegrevlex{self.weights}"
        return self.kind


# -- integer polynomial helpers ----------------------------------------------


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Exponent, b: Exponent) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _primitive(poly: dict, lead: Exponent) -> dict:
    g = reduce(math.gcd, poly.values())
    if poly[lead] < 0:
        g = -g
    if g != 1:
        poly = {e: c // g for e, c in poly.items()}
    return poly


def _to_int_dict(p: Polynomial) -> dict:
    items = p.terms
    den = reduce(math.lcm, (c.denominator for c in items.values()), 1)
    return {e: int(c * den) for e, c in items.items()}


class _Reducer:
    """Shared state for one Groebner computation: basis, keys and budget."""

    def __init__(self, order: MonomialOrder, budget: int):
        self.order = order
        self.budget = budget
        self.steps = 0
        self._keys: dict[Exponent, tuple] = {}
        self.polys: list[dict] = []
        self.leads: list[Exponent] = []

    def key(self, exp):
        k = self._keys.get(exp)
        if k is None:
            k = self.order.key(exp)
            self._keys[exp] = k
        return k

    def lead(self, poly: dict) -> Exponent:
        return max(poly, key=self.key)

    def tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise GroebnerBudgetExceeded(
                f"Groebner computation exceeded {self.budget} reduction steps"
            )

    def find_divisor(self, exp, active) -> int | None:
        for idx in active:
            if _divides(self.leads[idx], exp):
                return idx
        return None

    def reduce(self, poly: dict, active: Sequence[int], full: bool) -> dict:
        """Fraction-free reduction; returns a primitive remainder (possibly {})."""
        poly = dict(poly)
        remainder: dict = {}
        heap = [(_neg(self.key(e)), e) for e in poly]
        heapq.heapify(heap)
        scale_count = 0
        while heap:
            _, exp = heapq.heappop(heap)
            c = poly.get(exp)
            if not c:
                continue
            idx = self.find_divisor(exp, active)
            if idx is None:
                if not full:
                    remainder[exp] = c
                    del poly[exp]
                    for e, v in poly.items():
                        remainder[e] = v
                    poly = {}
                    break
                remainder[exp] = c
                del poly[exp]
                continue
            self.tick()
            g = self.polys[idx]
            lg = self.leads[idx]
            cg = g[lg]
            d = math.gcd(c, cg)
            a, b = cg // d, c // d
            shift = tuple(x - y for x, y in zip(exp, lg))
            if a != 1:
                for e in poly:
                    poly[e] *= a
                for e in remainder:
                    remainder[e] *= a
            for e, v in g.items():
                m = tuple(x + y for x, y in zip(e, shift))
                nv = poly.get(m, 0) - b * v
                if nv:
                    if m not in poly:
                        heapq.heappush(heap, (_neg(self.key(m)), m))
                    poly[m] = nv
                else:
                    poly.pop(m, None)
            scale_count += 1
            if scale_count % 16 == 0:
                values = list(poly.values()) + list(remainder.values())
                if values:
                    cont = reduce(math.gcd, values)
                    if cont > 1:
                        poly = {e: v // cont for e, v in poly.items()}
                        remainder = {e: v // cont for e, v in remainder.items()}
        if not remainder:
            return {}
        return _primitive(remainder, self.lead(remainder))


def _neg(key):
    return tuple(-x for x in key)


@dataclass
class GroebnerBasis:
    """Reduced Groebner basis with content-free integer generators."""

    generators: list[Polynomial]
    order: MonomialOrder
    source: list[Polynomial] = field(default_factory=list)
    nvars: int = 0
    steps: int = 0
    complete: bool = True

    @property
    def leading_monomials(self) -> list[Exponent]:
        key = self.order.key
        return [max(g.terms, key=key) for g in self.generators]

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def contains(self, p: Polynomial) -> bool:
        self._require_complete()
        return normal_form(p, self).is_zero()

    def _require_complete(self):
        if not self.complete:
            raise ValueError("partial basis: only zero-dimensionality is certified")

    def __len__(self):
        return len(self.generators)


def _update(red: _Reducer, G: list[int], B: list, h: int):
    """Gebauer-Moeller criteria: merge the new element h into basis G and pairs B."""
    lh = red.leads[h]
    C = list(G)
    D = []
    while C:
        g1 = C.pop(0)
        l1 = _lcm(lh, red.leads[g1])
        if _coprime(lh, red.leads[g1]):
            D.append(g1)
            continue
        dominated = False
        for g2 in C + D:
            if _divides(_lcm(lh, red.leads[g2]), l1):
                dominated = True
                break
        if not dominated:
            D.append(g1)
    E = [(h, g) for g in D if not _coprime(lh, red.leads[g])]
    B_new = []
    for (g1, g2) in B:
        l12 = _lcm(red.leads[g1], red.leads[g2])
        if (
            _divides(lh, l12)
            and _lcm(red.leads[g1], lh) != l12
            and _lcm(red.leads[g2], lh) != l12
        ):
            continue
        B_new.append((g1, g2))
    B_new.extend(E)
    G_new = [g for g in G if not _divides(lh, red.leads[g])]
    G_new.append(h)
    return G_new, B_new


def _spoly(red: _Reducer, i: int, j: int) -> dict:
    f, g = red.polys[i], red.polys[j]
    lf, lg = red.leads[i], red.leads[j]
    L = _lcm(lf, lg)
    cf, cg = f[lf], g[lg]
    d = math.gcd(cf, cg)
    a, b = cg // d, cf // d
    sf = tuple(x - y for x, y in zip(L, lf))
    sg = tuple(x - y for x, y in zip(L, lg))
    out: dict = {}
    for e, v in f.items():
        m = tuple(x + y for x, y in zip(e, sf))
        out[m] = out.get(m, 0) + a * v
    for e, v in g.items():
        m = tuple(x + y for x, y in zip(e, sg))
        nv = out.get(m, 0) - b * v
        if nv:
            out[m] = nv
        else:
            out.pop(m, None)
    return {e: v for e, v in out.items() if v}


def _has_all_pure_powers(red: _Reducer, G, n: int) -> bool:
    seen = set()
    for g in G:
        nz = [i for i, e in enumerate(red.leads[g]) if e]
        if len(nz) == 1:
            seen.add(nz[0])
    return len(seen) == n


def groebner_basis(
    gens: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    budget: int | None = None,
    stop_when_zero_dimensional: bool = False,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    With ``stop_when_zero_dimensional`` the completion stops as soon as every
    variable has a pure power among the leading monomials found so far; the
    result is then a partial basis (``complete=False``) that still certifies
    zero-dimensionality, since each of its elements lies in the ideal.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].nvars
    if any(g.nvars != n for g in gens):
        raise ValueError("generators live in different rings")
    order = order or MonomialOrder()
    if order.weights is not None and len(order.weights) != n:
        raise ValueError("order weights do not match the number of variables")
    red = _Reducer(order, default_budget() if budget is None else budget)

    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        return GroebnerBasis([], order, gens, n, 0)
    one = Polynomial.constant(1, n)
    if any(g.is_constant() for g in nonzero):
        return GroebnerBasis([one], order, gens, n, 0)

    # process inputs smallest-first so that early elements are cheap reducers
    start = []
    for g in nonzero:
        d = _to_int_dict(g)
        lead = red.lead(d)
        start.append((red.key(lead), _primitive(d, lead)))
    start.sort(key=lambda item: item[0])

    G: list[int] = []
    B: list = []
    for _, d in start:
        r = red.reduce(d, G, full=False)
        if not r:
            continue
        red.polys.append(r)
        red.leads.append(red.lead(r))
        h = len(red.polys) - 1
        if not any(red.leads[h]):
            return GroebnerBasis([one], order, gens, n, red.steps)
        G, B = _update(red, G, B, h)

    while B:
        # normal selection strategy: smallest lcm first
        best = min(
            range(len(B)),
            key=lambda k: red.key(_lcm(red.leads[B[k][0]], red.leads[B[k][1]])),
        )
        i, j = B.pop(best)
        s = _spoly(red, i, j)
        if not s:
            continue
        r = red.reduce(s, G, full=False)
        if not r:
            continue
        red.polys.append(r)
        red.leads.append(red.lead(r))
        h = len(red.polys) - 1
        if not any(red.leads[h]):
            return GroebnerBasis([one], order, gens, n, red.steps)
        G, B = _update(red, G, B, h)
        if stop_when_zero_dimensional and _has_all_pure_powers(red, G, n):
            polys = [Polynomial({e: Fraction(v) for e, v in red.polys[g].items()}, n) for g in G]
            return GroebnerBasis(polys, order, gens, n, red.steps, complete=False)

    # minimal basis, then inter-reduce tails
    minimal = [
        g for g in G
        if not any(o != g and _divides(red.leads[o], red.leads[g]) for o in G)
    ]
    reduced = []
    for g in minimal:
        others = [o for o in minimal if o != g]
        r = red.reduce(red.polys[g], others, full=True)
        reduced.append(r)
    polys = [
        Polynomial({e: Fraction(v) for e, v in r.items()}, n) for r in reduced
    ]
    polys.sort(key=lambda p: order.key(max(p.terms, key=order.key)))
    return GroebnerBasis(polys, order, gens, n, red.steps)


# -- normal forms and ideal invariants ----------------------------------------


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of p on division by gb, computed over Q."""
    if p.nvars != gb.nvars and gb.nvars:
        raise ValueError("polynomial and basis live in different rings")
    gb._require_complete()
    if p.is_zero() or not gb.generators:
        return p
    key = gb.order.key
    basis = []
    for g in gb.generators:
        terms = g.terms
        lead = max(terms, key=key)
        inv = 1 / terms[lead]
        basis.append((lead, {e: c * inv for e, c in terms.items()}))
    poly = p.terms
    remainder = {}
    heap = [(_neg(key(e)), e) for e in poly]
    heapq.heapify(heap)
    while heap:
        _, exp = heapq.heappop(heap)
        c = poly.pop(exp, None)
        if not c:
            continue
        for lead, g in basis:
            if _divides(lead, exp):
                shift = tuple(x - y for x, y in zip(exp, lead))
                for e, v in g.items():
                    if e == lead:
                        continue
                    m = tuple(x + y for x, y in zip(e, shift))
                    nv = poly.get(m, 0) - c * v
                    if nv:
                        if m not in poly:
                            heapq.heappush(heap, (_neg(key(m)), m))
                        poly[m] = nv
                    else:
                        poly.pop(m, None)
                break
        else:
            remainder[exp] = c
    return Polynomial(remainder, p.nvars)


def ideal_contains(gb: GroebnerBasis, p: Polynomial) -> bool:
    return normal_form(p, gb).is_zero()


def _require_proper(gb: GroebnerBasis):
    if gb.is_unit():
        raise UnitIdealError("the unit ideal has no Krull dimension")


def independent_sets(gb: GroebnerBasis, size: int) -> list[tuple[int, ...]]:
    """Variable sets (1-based) of the given size independent modulo the leading ideal."""
    leads = gb.leading_monomials
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leads]
    out = []
    for S in combinations(range(gb.nvars), size):
        s = set(S)
        if not any(sup <= s for sup in supports):
            out.append(tuple(i + 1 for i in S))
    return out


def krull_dimension(gb: GroebnerBasis) -> int:
    """Krull dimension of P/I, read off from the leading-term ideal."""
    _require_proper(gb)
    if not gb.complete:
        return 0 if is_zero_dimensional(gb) else krull_dimension(groebner_basis(gb.source, gb.order))
    for size in range(gb.nvars, -1, -1):
        if independent_sets(gb, size):
            return size
    return 0


def pure_powers(gb: GroebnerBasis) -> dict[int, int]:
    """For each variable index (1-based), the smallest pure power among leading monomials."""
    found: dict[int, int] = {}
    for m in gb.leading_monomials:
        nz = [i for i, e in enumerate(m) if e]
        if len(nz) == 1:
            i = nz[0] + 1
            found[i] = min(found.get(i, m[nz[0]]), m[nz[0]])
    return found


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    _require_proper(gb)
    return len(pure_powers(gb)) == gb.nvars
