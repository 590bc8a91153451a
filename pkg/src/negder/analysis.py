"""Deciding and certifying the existence of negative-degree derivations.

Two independent routes are provided. The generator rule inspects the
determinant derivations delta_nu, which together with the Euler derivation
generate all derivations of a normal quasihomogeneous ICIS; since module
coefficients have non-negative degree, a negative derivation exists exactly
when some delta_nu has negative degree. The brute-force route solves the
linear system for logarithmic vector fields degree by degree and quotients
by the fields with coefficients in the ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .derivations import (
    Derivation,
    apply,
    derivation_degree,
    trivial_derivations,
)
from .groebner import normal_form
from .linalg import EchelonSpan, nullspace
from .poly import (
    INHOMOGENEOUS,
    Polynomial,
    monomials_of_degree,
    order_of,
    partial_derivative,
    render,
    substitute,
)
from .singularity import (
    ConditionWitness,
    SingularitySystem,
    condition_A,
    condition_B,
    cone_probes,
    ideal_basis,
    is_normal_icis,
    validate_system,
)


class PreconditionError(ValueError):
    pass


class NotAnnihilatingError(PreconditionError):
    pass


class NonIsolatedError(RuntimeError):
    """The reduction reached k = t + 1, which cannot happen for an isolated singularity."""


class TheoryViolation(AssertionError):
    """A proven statement failed on concrete input: either a bug or invalid input."""

    def __init__(self, message: str, system: SingularitySystem | None = None, certificate=None):
        self.system = system
        self.certificate = certificate
        parts = [message]
        if system is not None:
            parts.append(f"  variables: {' '.join(system.variables)}")
            parts.append(f"  weights:   {' '.join(map(str, system.w.weights))}")
            for j, text in enumerate(system.equations_text(), start=1):
                parts.append(f"  g{j} = {text}")
        if certificate is not None:
            parts.append(f"  certificate: {certificate!r}")
        super().__init__("\n".join(parts))


@dataclass
class NegativityVerdict:
    exists: bool
    min_degree: int
    witnesses: list[tuple[tuple[int, ...], int, Derivation]]
    decision_basis: str
    notes: list[str] = field(default_factory=list)

    def as_dict(self, variables: Sequence[str] | None = None) -> dict:
        return {
            "exists": self.exists,
            "min_degree": self.min_degree,
            "decision_basis": self.decision_basis,
            "witnesses": [
                {"nu": list(nu), "degree": deg, "coefficients": d.render(variables)}
                for nu, deg, d in self.witnesses
            ],
            "notes": list(self.notes),
        }


def min_trivial_degree(s: SingularitySystem) -> tuple[int, tuple[int, ...]]:
    """Smallest degree p_1 + ... + p_t - w_{nu_0} - ... - w_{nu_t}, attained at nu = (1..t+1)."""
    if s.t + 1 > s.n:
        raise PreconditionError(f"no trivial derivations: t + 1 = {s.t + 1} exceeds n = {s.n}")
    nu = tuple(range(1, s.t + 2))
    return sum(s.p) - sum(s.w.weights[: s.t + 1]), nu


def trivial_degree(s: SingularitySystem, nu: Sequence[int]) -> int:
    return sum(s.p) - sum(s.w[i - 1] for i in nu)


def has_negative_derivations(s: SingularitySystem, check: bool = True) -> NegativityVerdict:
    """Generator rule for normal ICIS: negative derivations exist iff p_1+...+p_t < w_1+...+w_{t+1}."""
    if check and not is_normal_icis(s):
        raise PreconditionError(
            "the generator rule needs a normal ICIS (complete intersection, isolated, d >= 2); "
            "use derivation_space for other inputs"
        )
    bound, _ = min_trivial_degree(s)
    notes = [
        "derivations are generated by the Euler derivation (degree 0) and the delta_nu; "
        "coefficients have degree >= 0, so a negative derivation exists iff some generator "
        "has negative degree"
    ]
    witnesses = []
    for nu, delta in trivial_derivations(list(s.g), s.w):
        deg = trivial_degree(s, nu)
        if deg < 0 and not delta.is_zero():
            witnesses.append((nu, deg, delta))
    exists = bound < 0
    if exists and not witnesses:
        dims = oracle_sweep(s, bound, -1)
        notes.append(
            f"all candidate delta_nu of negative degree vanish; oracle dimensions {dims} used instead"
        )
        return NegativityVerdict(any(dims.values()), bound, [], "brute-force-oracle", notes)
    return NegativityVerdict(exists, bound, witnesses, "generator-rule", notes)


# -- brute-force graded pieces ------------------------------------------------------


@dataclass
class GradedDerivationSpace:
    """Degree piece of {derivations preserving <g>} / <g> * {all derivations}.

    Coordinates are monomial coefficients indexed by ``slots``: pairs
    (i, exponent) standing for x^exponent * d/dx_i.
    """

    degree: int
    basis: list[Derivation]
    dimension: int
    slots: list[tuple[int, tuple[int, ...]]]
    logarithmic_dimension: int
    trivial_dimension: int
    _log_span: EchelonSpan | None = field(default=None, repr=False)
    _trivial_span: EchelonSpan | None = field(default=None, repr=False)
    _total_span: EchelonSpan | None = field(default=None, repr=False)

    def vector(self, d: Derivation) -> list[Fraction]:
        """Coordinates of d; raises ValueError if d has terms outside this degree."""
        index = {slot: k for k, slot in enumerate(self.slots)}
        v = [Fraction(0)] * len(self.slots)
        for i, q in enumerate(d.coefficients, start=1):
            for e, c in q.items():
                k = index.get((i, e))
                if k is None:
                    raise ValueError(f"term of d/dx{i} outside degree {self.degree}")
                v[k] = c
        return v

    def is_logarithmic(self, d: Derivation) -> bool:
        return not self.slots or self._log_span.contains(self.vector(d))

    def is_trivial(self, d: Derivation) -> bool:
        """True when d has all coefficients in the ideal, i.e. its class vanishes."""
        return not self.slots or self._trivial_span.contains(self.vector(d))

    def contains_class(self, d: Derivation) -> bool:
        """Whether the class of d lies in the span of ``basis`` modulo trivial fields."""
        return not self.slots or self._total_span.contains(self.vector(d))


def _slot_derivation(slots, v, n, weights) -> Derivation:
    coeffs: list[dict] = [dict() for _ in range(n)]
    for (i, e), c in zip(slots, v):
        if c:
            coeffs[i - 1][e] = c
    return Derivation(tuple(Polynomial(t, n) for t in coeffs), weights)


def derivation_space(s: SingularitySystem, degree: int) -> GradedDerivationSpace:
    """Exact linear-algebra computation of the derivations of the quotient in one degree."""
    n, w = s.n, s.w.weights
    slots = [
        (i, e)
        for i in range(1, n + 1)
        for e in monomials_of_degree(w, degree + w[i - 1])
    ]
    if not slots:
        return GradedDerivationSpace(degree, [], 0, [], 0, 0)
    gb = ideal_basis(s)
    partials = [[partial_derivative(gj, i) for i in range(1, n + 1)] for gj in s.g]

    # constraint matrix: normal forms of x^e * d_i g_j, one column per slot
    row_index: dict[tuple[int, tuple[int, ...]], int] = {}
    columns = []
    for i, e in slots:
        mono = Polynomial.monomial(e)
        entries = {}
        for j in range(s.t):
            dg = partials[j][i - 1]
            if dg.is_zero():
                continue
            nf = normal_form(mono * dg, gb)
            for m, c in nf.items():
                key = (j, m)
                if key not in row_index:
                    row_index[key] = len(row_index)
                entries[row_index[key]] = c
        columns.append(entries)
    rows = [[Fraction(0)] * len(slots) for _ in range(len(row_index))]
    for col, entries in enumerate(columns):
        for r, c in entries.items():
            rows[r][col] = c
    log_basis = nullspace(rows, len(slots))

    index = {slot: k for k, slot in enumerate(slots)}
    trivial = EchelonSpan(len(slots))
    for l, gl in enumerate(s.g):
        for i in range(1, n + 1):
            for a in monomials_of_degree(w, degree + w[i - 1] - s.p[l]):
                v = [Fraction(0)] * len(slots)
                for e, c in gl.items():
                    v[index[(i, tuple(x + y for x, y in zip(a, e)))]] = c
                trivial.add(v)
    trivial_dim = trivial.dimension

    log_span = EchelonSpan(len(slots))
    for v in log_basis:
        log_span.add(v)
    total = EchelonSpan(len(slots))
    for row in trivial.rows.values():
        total.add(row)
    quotient = [v for v in log_basis if total.add(v)]
    basis = [_slot_derivation(slots, v, n, s.w) for v in quotient]
    trivial_copy = EchelonSpan(len(slots))
    for row in trivial.rows.values():
        trivial_copy.add(row)
    return GradedDerivationSpace(
        degree=degree,
        basis=basis,
        dimension=len(basis),
        slots=slots,
        logarithmic_dimension=len(log_basis),
        trivial_dimension=trivial_dim,
        _log_span=log_span,
        _trivial_span=trivial_copy,
        _total_span=total,
    )


def oracle_sweep(s: SingularitySystem, lo: int, hi: int) -> dict[int, int]:
    """Dimensions of the derivation pieces for lo <= degree <= hi."""
    return {d: derivation_space(s, d).dimension for d in range(lo, hi + 1)}


# -- coordinate-change reduction -------------------------------------------------------


@dataclass
class ReductionResult:
    eta: Derivation
    system: SingularitySystem
    k: int | None
    witness: ConditionWitness | None
    changes: list[dict] = field(default_factory=list)

    @property
    def eliminated(self) -> bool:
        return self.k is None


def _slice_coefficient(g: Polynomial, k: int, power: int) -> Polynomial:
    """Coefficient of x_k^power in g, as a polynomial free of x_k."""
    out = {}
    for e, c in g.items():
        if e[k - 1] == power:
            out[e[: k - 1] + (0,) + e[k:]] = c
    return Polynomial(out, g.nvars)


def coordinate_change_step(s: SingularitySystem, eta: Derivation, k: int, witness: ConditionWitness):
    """Coordinate change x_k -> x_k + t_1 removing the d/dx_k term of eta.

    ``witness`` is an A(k) witness (x_k^m in g_j). Returns the transformed
    system, the transformed derivation and t_1.
    """
    gj = s.g[witness.j - 1]
    m = witness.m
    exp = [0] * s.n
    exp[k - 1] = m
    lead = gj.coefficient(exp)
    t1 = _slice_coefficient(gj, k, m - 1) / (lead * m)
    xk = Polynomial.variable(k, s.n)
    back = xk - t1  # old x_k in terms of the new coordinates

    new_g = [substitute(gl, k, back) for gl in s.g]
    image_k = eta[k] + sum(
        (q * partial_derivative(t1, i) for i, q in enumerate(eta.coefficients, start=1) if i != k),
        Polynomial.zero(s.n),
    )
    coeffs = []
    for i, q in enumerate(eta.coefficients, start=1):
        target = image_k if i == k else q
        coeffs.append(substitute(target, k, back))
    return s.with_equations(new_g), Derivation(tuple(coeffs), s.w), t1


def reduce_negative_derivation(s: SingularitySystem, eta: Derivation) -> ReductionResult:
    """Remove leading coefficients of a negative derivation by homogeneous coordinate changes.

    For increasing k with q_k != 0, while a pure power of x_k occurs in some
    equation, a coordinate change makes q_k = 0. Stops at the first k where
    no pure power occurs and returns the B(k) witness there.
    """
    if eta.nvars != s.n:
        raise PreconditionError("derivation and system live in different rings")
    eta = Derivation(eta.coefficients, s.w)
    if eta.is_zero():
        return ReductionResult(eta, s, None, None)
    deg = derivation_degree(eta, s.w)
    if deg == INHOMOGENEOUS or deg >= 0:
        raise PreconditionError(f"eta must be homogeneous of negative degree, got {deg}")
    gb = ideal_basis(s)
    for j, gj in enumerate(s.g, start=1):
        if not normal_form(apply(eta, gj), gb).is_zero():
            raise NotAnnihilatingError(f"eta(g{j}) is not in the ideal")
    for i, q in enumerate(eta.coefficients, start=1):
        if q.is_zero():
            continue
        if i > s.t + 1:
            raise PreconditionError(f"coefficient of d/dx{i} must vanish for i > t + 1")
        if any(v <= i for v in q.support_variables()):
            raise PreconditionError(f"coefficient of d/dx{i} must only involve x_{i + 1}, ..., x_n")

    normal = is_normal_icis(s)
    exact = all(apply(eta, gj).is_zero() for gj in s.g)
    cur, changes = s, []
    for k in range(1, min(s.t + 1, s.n) + 1):
        if eta[k].is_zero():
            continue
        a = condition_A(cur, k)
        if a is not None:
            cur, eta, t1 = coordinate_change_step(cur, eta, k, a)
            changes.append({"k": k, "j": a.j, "m": a.m, "t1": render(t1, cur.variables)})
            if not eta[k].is_zero():
                if not exact:
                    raise PreconditionError(
                        "the coordinate change needs eta(g_j) = 0 identically, not only modulo the ideal"
                    )
                raise TheoryViolation(f"coordinate change at k={k} left q_k != 0", cur, eta)
            continue
        if k == s.t + 1:
            raise NonIsolatedError(
                f"reduction reached k = t + 1 = {k}: all equations are independent of x_{k}"
            )
        b = condition_B(cur, k)
        if b is None:
            if normal:
                raise TheoryViolation(f"neither A({k}) nor B({k}) holds", cur)
            raise PreconditionError(f"neither A({k}) nor B({k}) holds; the input is not isolated")
        if normal:
            _check_reduction_conclusions(cur, k, b)
        return ReductionResult(eta, cur, k, b, changes)
    return ReductionResult(eta, cur, None, None, changes)


def _check_reduction_conclusions(s: SingularitySystem, k: int, b: ConditionWitness):
    t, d = s.t, s.d
    failures = []
    if not k <= t:
        failures.append(f"k={k} > t={t}")
    if not k >= t - d + 2:
        failures.append(f"k={k} < t-d+2={t - d + 2}")
    for j in range(k, t + 1):
        if order_of(s.g[j - 1]) > 2:
            failures.append(f"g{j} has order > 2")
        if b.exponents[j - 1] != 1:
            failures.append(f"m_{j} = {b.exponents[j - 1]} != 1")
        if b.nu[j - 1] < t + 2:
            failures.append(f"nu_{j} = {b.nu[j - 1]} < t+2")
    if failures:
        raise TheoryViolation("reduction conclusions fail: " + "; ".join(failures), s, b)


# -- consistency checks ----------------------------------------------------------------


def _require_normal(s: SingularitySystem):
    if not is_normal_icis(s):
        raise PreconditionError("input is not a normal ICIS")


def theorem0_check(s: SingularitySystem) -> bool:
    """If every equation has order >= 3, assert there are no negative derivations.

    Returns whether the order hypothesis applied.
    """
    _require_normal(s)
    if min(s.orders) < 3:
        return False
    verdict = has_negative_derivations(s, check=False)
    if verdict.exists:
        raise TheoryViolation("order >= 3 but a negative derivation exists", s, verdict)
    return True


def embdim5_check(s: SingularitySystem) -> bool:
    """Embedding dimension 5, codimension 2: asserts absence; returns the exists flag."""
    if (s.n, s.t) != (5, 2):
        raise PreconditionError(f"needs n=5 and t=2, got n={s.n}, t={s.t}")
    _require_normal(s)
    verdict = has_negative_derivations(s, check=False)
    if verdict.exists:
        raise TheoryViolation("negative derivation in embedding dimension 5", s, verdict)
    if sum(s.p) < sum(s.w.weights[: s.t + 1]):
        for k1, k2 in ((1, 2), (2, 1)):
            if condition_A(s, k1) and condition_B(s, k2):
                raise TheoryViolation(f"A({k1}) and B({k2}) together with the inequality", s)
    return verdict.exists


def halperin_bound(s: SingularitySystem) -> int:
    """Degree below which a zero-dimensional quotient has no derivations: p_t - p_1."""
    if s.d != 0:
        raise PreconditionError(f"needs a zero-dimensional system (d = 0), got d = {s.d}")
    return s.p[-1] - s.p[0]


def grading_independence_check(g: Sequence[Polynomial], variables=None) -> bool:
    """Compare the generator-rule verdict and degrees over several positive gradings."""
    g = list(g)
    probes = cone_probes(g)
    if len(probes) < 2:
        return True
    if len(g) == 1 and order_of(g[0]) < 3:
        raise PreconditionError("grading independence is not claimed for t=1 with order < 3")
    outcomes = []
    for w in probes:
        s = validate_system(g, w, variables)
        if not is_normal_icis(s):
            raise PreconditionError(f"probe weights {w.weights} do not give a normal ICIS")
        verdict = has_negative_derivations(s, check=False)
        outcomes.append((w.weights, verdict.exists, tuple(sorted(s.p))))
    reference = outcomes[0][1:]
    for weights, *rest in outcomes[1:]:
        if tuple(rest) != reference:
            raise TheoryViolation(f"gradings disagree: {outcomes}")
    return True
