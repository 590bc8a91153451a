"""System files and the JSON analysis report.

A system file is UTF-8 text with one directive per line::

    # comment
    vars: x1 x2 x3
    weights: 1 1 1
    field: QQ
    eq: x1^2 + x2^2 + x3^2

``weights`` and ``field`` are optional; the only supported field is the
rationals. Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .analysis import (
    TheoryViolation,
    embdim5_check,
    has_negative_derivations,
    min_trivial_degree,
    theorem0_check,
)
from .derivations import generator_count
from .groebner import default_budget
from .poly import Polynomial, PolynomialSyntaxError, parse_polynomial
from .singularity import (
    SingularitySystem,
    conditions_table,
    dimension,
    ideal_basis,
    infer_weights,
    is_isolated,
    lemma12_check,
    validate_system,
    weight_cone_rays,
)

SCHEMA_VERSION = 1
RATIONAL_FIELDS = {"QQ", "Q", "rationals"}
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class SystemFileError(ValueError):
    """Malformed system file; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1, source: str = "<input>"):
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{source}:{line}:{column}: {message}")


@dataclass
class SystemFile:
    variables: list[str]
    equations: list[str]
    weights: list[int] | None = None
    coefficient_field: str = "QQ"
    comments: list[str] = field(default_factory=list)
    polynomials: list[Polynomial] = field(default_factory=list)

    def text(self) -> str:
        lines = [f"# {c}" for c in self.comments]
        lines.append("vars: " + " ".join(self.variables))
        if self.weights is not None:
            lines.append("weights: " + " ".join(map(str, self.weights)))
        lines += [f"eq: {e}" for e in self.equations]
        return "\n".join(lines) + "\n"

    def system(self) -> SingularitySystem:
        return validate_system(self.polynomials, weights_for(self), self.variables)


def parse_system_file(text: str, source: str = "<input>") -> SystemFile:
    variables = None
    weights = None
    field_name = "QQ"
    comments = []
    eqs: list[tuple[int, int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            comments.append(stripped[1:].strip())
            continue
        key, sep, value = raw.partition(":")
        key = key.strip()
        if not sep:
            raise SystemFileError("expected 'key: value'", lineno, 1, source)
        value_col = len(key) + len(raw) - len(raw.lstrip()) + 2
        value_col += len(value) - len(value.lstrip())
        value = value.strip()
        if key == "vars":
            if variables is not None:
                raise SystemFileError("duplicate vars line", lineno, 1, source)
            variables = value.split()
            if not variables:
                raise SystemFileError("no variables given", lineno, value_col, source)
            for name in variables:
                if not _NAME.match(name):
                    col = value_col + value.index(name)
                    raise SystemFileError(f"invalid variable name {name!r}", lineno, col, source)
            if len(set(variables)) != len(variables):
                raise SystemFileError("repeated variable name", lineno, value_col, source)
        elif key == "weights":
            if weights is not None:
                raise SystemFileError("duplicate weights line", lineno, 1, source)
            weights = []
            offset = 0
            for token in value.split():
                offset = value.index(token, offset)
                if not re.fullmatch(r"[0-9]+", token) or int(token) == 0:
                    raise SystemFileError(
                        f"weight {token!r} is not a positive integer", lineno, value_col + offset, source
                    )
                weights.append(int(token))
                offset += len(token)
            if not weights:
                raise SystemFileError("no weights given", lineno, value_col, source)
        elif key == "field":
            if value not in RATIONAL_FIELDS:
                raise SystemFileError(
                    f"unsupported field {value!r}; only QQ is available", lineno, value_col, source
                )
            field_name = "QQ"
        elif key == "eq":
            if not value:
                raise SystemFileError("empty equation", lineno, value_col, source)
            eqs.append((lineno, value_col, value))
        else:
            raise SystemFileError(f"unknown directive {key!r}", lineno, 1, source)

    if variables is None:
        raise SystemFileError("missing vars line", max(1, len(text.splitlines())), 1, source)
    if weights is not None and len(weights) != len(variables):
        raise SystemFileError(
            f"{len(weights)} weights for {len(variables)} variables",
            _line_of(text, "weights"), 1, source,
        )
    if not eqs:
        raise SystemFileError("no eq lines", max(1, len(text.splitlines())), 1, source)
    polys = []
    for lineno, col, eq in eqs:
        try:
            polys.append(parse_polynomial(eq, variables))
        except PolynomialSyntaxError as exc:
            raise SystemFileError(str(exc), lineno, col + exc.position, source) from exc
    return SystemFile(variables, [e for _, _, e in eqs], weights, field_name, comments, polys)


def _line_of(text: str, key: str) -> int:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.strip().startswith(key + ":"):
            return lineno
    return 1


def read_system_file(path: str) -> SystemFile:
    with open(path, encoding="utf-8") as fh:
        return parse_system_file(fh.read(), source=path)


# -- the report ---------------------------------------------------------------


@lru_cache(maxsize=1)
def load_schema() -> dict:
    return json.loads(resources.files("negder").joinpath("report_schema.json").read_text("utf-8"))


def build_report(sf: SystemFile, s: SingularitySystem | None = None) -> dict:
    """Run the whole pipeline on a parsed file and collect a JSON-ready report.

    Validation errors propagate; so do Groebner budget errors and theory
    violations raised by the consistency checks.
    """
    start = time.perf_counter()
    s = s or sf.system()
    basis = ideal_basis(s)
    dim = dimension(s)
    ci = dim == s.n - s.t
    iso = is_isolated(s)
    normal = s.d >= 2 and ci and iso.isolated
    conditions = conditions_table(s)
    lemma12 = lemma12_check(s)

    report = {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "variables": list(sf.variables),
            "weights": list(weights_for(sf)),
            "equations": list(sf.equations),
        },
        "validation": {
            "ok": True,
            "variables": list(s.variables),
            "weights": list(s.w.weights),
            "equations": s.equations_text(),
            "variable_permutation": list(s.variable_permutation),
            "equation_permutation": list(s.equation_permutation),
        },
        "n": s.n,
        "t": s.t,
        "d": s.d,
        "degrees": list(s.p),
        "orders": list(s.orders),
        "complete_intersection": ci,
        "dimension": dim,
        "isolated": iso.isolated,
        "isolation_test": "m-primary (graded)",
        "normal": normal,
        "conditions": conditions,
        "degree_inequalities": lemma12,
        "min_trivial_degree": None,
        "generator_count": None,
        "verdict": None,
        "checks": {},
        "engine": {
            "budget": default_budget(),
            "ideal_basis_size": len(basis),
            "ideal_steps": basis.steps,
            "isolation_basis_size": iso.basis_size,
            "isolation_steps": iso.steps,
        },
        "timing": {},
    }
    if s.t < s.n:
        bound, nu = min_trivial_degree(s)
        report["min_trivial_degree"] = {"degree": bound, "nu": list(nu)}
        report["generator_count"] = generator_count(s.n, s.t)
    if ci and iso.isolated:
        report["checks"]["isolation_necessary_conditions"] = _necessary_conditions(s, conditions, lemma12)
    if normal:
        verdict = has_negative_derivations(s, check=False)
        report["verdict"] = verdict.as_dict(s.variables)
        report["checks"]["order_at_least_3"] = theorem0_check(s)
        if (s.n, s.t) == (5, 2):
            report["checks"]["embedding_dimension_5"] = not embdim5_check(s)
    report["timing"]["seconds"] = round(time.perf_counter() - start, 6)
    return report


def _necessary_conditions(s, conditions, lemma12) -> bool:
    if not all(lemma12):
        raise TheoryViolation("isolated complete intersection violates the degree inequalities", s)
    missing = [row["k"] for row in conditions if row["A"] is None and row["B"] is None]
    if missing:
        raise TheoryViolation(f"isolated complete intersection without A(k) or B(k) for k in {missing}", s)
    return True


def strip_timing(report: dict) -> dict:
    """Copy without the fields that legitimately change between runs."""
    out = json.loads(json.dumps(report))
    out.pop("timing", None)
    return out


def weights_for(sf: SystemFile) -> list[int]:
    """The file's weights, or the unique positive grading when the line is absent."""
    if sf.weights is not None:
        return sf.weights
    found = infer_weights(sf.polynomials)
    rays = weight_cone_rays(sf.polynomials)
    if len(found) != 1 or len(rays) != 1:
        raise ValueError(
            "no weights line and the equations do not determine a unique grading "
            f"(weight cone with {len(rays)} extreme rays); add a weights line"
        )
    return list(found[0].weights)


def format_text(report: dict) -> str:
    """Human-readable summary of a report."""
    v = report["validation"]
    lines = [
        f"variables  {' '.join(v['variables'])}",
        f"weights    {' '.join(map(str, v['weights']))}",
    ]
    for j, (eq, p, o) in enumerate(zip(v["equations"], report["degrees"], report["orders"]), start=1):
        lines.append(f"g{j} = {eq}    (degree {p}, order {o})")
    lines.append(
        f"n = {report['n']}, t = {report['t']}, d = {report['d']}, "
        f"Krull dimension {report['dimension']}"
    )
    lines.append(f"complete intersection  {_yes(report['complete_intersection'])}")
    lines.append(f"isolated               {_yes(report['isolated'])}  [{report['isolation_test']}]")
    lines.append(f"normal ICIS            {_yes(report['normal'])}")
    lines.append("conditions:")
    for row in report["conditions"]:
        a = row["A"]
        b = row["B"]
        parts = []
        if a:
            parts.append(f"A: x{row['k']}^{a['m']} in g{a['j']}")
        if b:
            parts.append(f"B: nu={tuple(b['nu'])} m={tuple(b['m'])}")
        lines.append(f"  k={row['k']}: " + ("; ".join(parts) if parts else "neither A nor B"))
    lines.append("degree inequalities: " + " ".join(_yes(x) for x in report["degree_inequalities"]))
    mt = report["min_trivial_degree"]
    if mt is not None:
        lines.append(f"smallest determinant degree {mt['degree']} at nu = {tuple(mt['nu'])}")
        lines.append(f"generators (Euler + determinants): {report['generator_count']}")
    verdict = report["verdict"]
    if verdict is None:
        lines.append("negative derivations: no verdict (not a normal ICIS)")
    else:
        lines.append(f"negative derivations: {'exist' if verdict['exists'] else 'none'}")
        for wit in verdict["witnesses"]:
            lines.append(f"  nu = {tuple(wit['nu'])}, degree {wit['degree']}:")
            for i, c in enumerate(wit["coefficients"], start=1):
                if c != "0":
                    lines.append(f"    d/d{v['variables'][i - 1]}: {c}")
    if "seconds" in report.get("timing", {}):
        lines.append(f"time {report['timing']['seconds']:.3f} s")
    return "\n".join(lines)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"

