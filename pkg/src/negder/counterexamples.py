"""The family of codimension-two ICIS with a derivation of degree -1, n >= 6."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .derivations import Derivation, apply, derivation_degree, trivial_derivation
from .poly import parse_polynomial
from .singularity import (
    SingularitySystem,
    dimension,
    is_isolated,
    validate_system,
)

MAX_N = 12

ETA_TEXT = ("2*x3*(x5 - x6)", "-2*x3*(x4 - x5)", "x4*x6 - x5^2")


class CounterexampleParamsError(ValueError):
    pass


class VerificationFailure(AssertionError):
    def __init__(self, message: str, report: dict):
        self.report = report
        super().__init__(message)


def default_constants(n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(k + 1) for k in range(1, n - 5))


@dataclass(frozen=True)
class CounterexampleParams:
    n: int = 6
    c: tuple[Fraction, ...] | None = None
    max_n: int = MAX_N

    def __post_init__(self):
        if self.n < 6:
            raise CounterexampleParamsError(f"the family needs n >= 6, got n = {self.n}")
        if self.n > self.max_n:
            raise CounterexampleParamsError(f"n = {self.n} exceeds the configured bound {self.max_n}")
        c = default_constants(self.n) if self.c is None else tuple(Fraction(x) for x in self.c)
        if len(c) != self.n - 6:
            raise CounterexampleParamsError(f"need {self.n - 6} constants c_7..c_n, got {len(c)}")
        for i, ci in enumerate(c, start=7):
            if ci == 1:
                raise CounterexampleParamsError(f"c_{i} = 1 is not allowed")
            if ci == 0:
                # the second Jacobian row vanishes on the curve x4^5 = x_i^5
                raise CounterexampleParamsError(f"c_{i} = 0 gives a non-isolated singularity")
            if ci**9 + 1 == 0:
                raise CounterexampleParamsError(f"c_{i}^9 + 1 = 0 for c_{i} = {ci}")
        if len(set(c)) != len(c):
            raise CounterexampleParamsError(f"constants must be pairwise different: {c}")
        object.__setattr__(self, "c", c)


def equations_text(params: CounterexampleParams) -> tuple[str, str]:
    g1 = "x1*x4 + x2*x5 + x3^2 - x4^5"
    g2 = "x1*x5 + x2*x6 + x3^2 + x6^5"
    for i, ci in enumerate(params.c, start=7):
        g1 += f" + x{i}^5"
        g2 += f" + {ci}*x{i}^5" if ci >= 0 else f" - {-ci}*x{i}^5"
    return g1, g2


def weights(n: int) -> tuple[int, ...]:
    return (8, 8, 5) + (2,) * (n - 3)


def build_counterexample(params: CounterexampleParams) -> tuple[SingularitySystem, Derivation]:
    n = params.n
    g = [parse_polynomial(text, n) for text in equations_text(params)]
    s = validate_system(g, weights(n))
    eta = Derivation.from_text(ETA_TEXT + ("0",) * (n - 3), n, s.w)
    return s, eta


def system_file(params: CounterexampleParams) -> str:
    """The example as a system file understood by ``negder analyze``."""
    n = params.n
    lines = [
        f"# counter-example family, n = {n}, c = {', '.join(map(str, params.c)) or 'none'}",
        "vars: " + " ".join(f"x{i}" for i in range(1, n + 1)),
        "weights: " + " ".join(map(str, weights(n))),
    ]
    lines += [f"eq: {text}" for text in equations_text(params)]
    return "\n".join(lines) + "\n"


def verify_counterexample(params: CounterexampleParams, raise_on_failure: bool = True) -> dict:
    """Run the six checks and return a certificate dictionary."""
    from .analysis import has_negative_derivations

    start = time.perf_counter()
    s, eta = build_counterexample(params)
    checks = {}
    checks["degrees"] = {"p": list(s.p), "passed": s.p == (10, 10)}
    eta_degree = derivation_degree(eta)
    checks["eta_degree"] = {"degree": eta_degree, "passed": eta_degree == -1}
    residues = [apply(eta, gj) for gj in s.g]
    checks["annihilation"] = {
        "residues": [str(r) for r in residues],
        "passed": all(r.is_zero() for r in residues),
    }
    dim = dimension(s)
    checks["complete_intersection"] = {
        "dimension": dim,
        "d": s.d,
        "passed": dim == s.n - 2 and s.d >= 4,
    }
    iso = is_isolated(s)
    checks["isolated"] = {
        "pure_powers": {str(k): v for k, v in sorted(iso.pure_powers.items())},
        "basis_size": iso.basis_size,
        "passed": iso.isolated,
    }
    verdict = has_negative_derivations(s, check=False)
    nus = [nu for nu, _, _ in verdict.witnesses]
    delta = trivial_derivation(list(s.g), (1, 2, 3), s.w)
    same_up_to_sign = delta == eta or delta == -eta
    checks["negative_derivation"] = {
        "exists": verdict.exists,
        "witnesses": [list(nu) for nu in nus],
        "eta_is_delta_123": same_up_to_sign,
        "passed": verdict.exists and (1, 2, 3) in nus and same_up_to_sign,
    }
    report = {
        "n": params.n,
        "c": [str(x) for x in params.c],
        "checks": checks,
        "passed": all(c["passed"] for c in checks.values()),
        "seconds": time.perf_counter() - start,
    }
    if raise_on_failure and not report["passed"]:
        failed = [name for name, c in checks.items() if not c["passed"]]
        raise VerificationFailure(f"failed checks: {', '.join(failed)}", report)
    return report
