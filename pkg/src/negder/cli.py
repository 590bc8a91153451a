"""The ``negder`` command.

Exit codes: 0 analysis completed (whatever the verdict), 1 input error,
2 Groebner step budget exhausted, 3 a proven statement failed on the input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .analysis import TheoryViolation, has_negative_derivations, oracle_sweep
from .counterexamples import (
    CounterexampleParams,
    CounterexampleParamsError,
    VerificationFailure,
    system_file,
    verify_counterexample,
)
from .groebner import GroebnerBudgetExceeded
from .poly import PolynomialError
from .report import (
    SystemFileError,
    build_report,
    format_text,
    parse_system_file,
    read_system_file,
)
from .singularity import ValidationError, cone_probes, is_normal_icis, weight_cone_rays

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_RESOURCE = 2
EXIT_THEORY = 3


class InputError(Exception):
    pass


def _emit(payload, as_json: bool, text: str, out=None):
    out = out or sys.stdout
    if as_json:
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def cmd_analyze(args) -> int:
    sf = read_system_file(args.file)
    report = build_report(sf)
    _emit(report, args.json, format_text(report))
    return EXIT_OK


def parse_constants(text: str | None) -> tuple[Fraction, ...] | None:
    if text is None:
        return None
    if not text.strip():
        return ()
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot read constants {text!r}: {exc}") from exc


def cmd_counterexample(args) -> int:
    params = CounterexampleParams(args.n, parse_constants(args.c))
    text = system_file(params)
    report = build_report(parse_system_file(text, source="<counterexample>"))
    certificate = verify_counterexample(params, raise_on_failure=False)
    report["counterexample"] = {
        "n": certificate["n"],
        "c": certificate["c"],
        "checks": certificate["checks"],
        "passed": certificate["passed"],
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    elif args.json:
        report["system_file"] = text
    else:
        sys.stdout.write(text + "\n")
    lines = [format_text(report), "certificate:"]
    for name, check in certificate["checks"].items():
        lines.append(f"  {name:<22} {'pass' if check['passed'] else 'FAIL'}")
    _emit(report, args.json, "\n".join(lines))
    if not certificate["passed"]:
        failed = [k for k, c in certificate["checks"].items() if not c["passed"]]
        raise VerificationFailure(f"failed checks: {', '.join(failed)}", certificate)
    return EXIT_OK


def parse_degree_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise InputError(f"degree range must look like LO..HI, got {text!r}") from None


def cmd_oracle(args) -> int:
    lo, hi = parse_degree_range(args.degrees)
    s = read_system_file(args.file).system()
    dims = oracle_sweep(s, lo, hi)
    payload = {"degrees": {str(d): v for d, v in dims.items()}, "rule": None, "agreement": None}
    lines = [f"degree {d:>4}: dimension {v}" for d, v in dims.items()] or ["empty degree range"]
    disagreement = None
    if dims and s.t < s.n and is_normal_icis(s):
        verdict = has_negative_derivations(s, check=False)
        payload["rule"] = {"exists": verdict.exists, "min_degree": verdict.min_degree}
        negative = {d: v for d, v in dims.items() if d < 0}
        if not verdict.exists and any(negative.values()):
            disagreement = "the oracle finds negative derivations the generator rule excludes"
        covered = all(d in dims for d in range(verdict.min_degree, 0))
        if verdict.exists and covered and not any(negative.values()):
            disagreement = "the generator rule predicts negative derivations the oracle does not find"
        payload["agreement"] = disagreement is None
        lines.append(
            f"generator rule: negative derivations {'exist' if verdict.exists else 'absent'} "
            f"(smallest determinant degree {verdict.min_degree}); "
            + ("agrees" if disagreement is None else "DISAGREES")
        )
    _emit(payload, args.json, "\n".join(lines))
    if disagreement:
        raise TheoryViolation(disagreement, s)
    return EXIT_OK


def cmd_infer_weights(args) -> int:
    sf = read_system_file(args.file)
    rays = weight_cone_rays(sf.polynomials)
    probes = cone_probes(sf.polynomials)
    payload = {
        "variables": sf.variables,
        "rays": [list(r) for r in rays],
        "weights": [list(w.weights) for w in probes],
        "unique": len(rays) == 1 and len(probes) == 1,
    }
    if not probes:
        lines = ["no positive grading makes every equation homogeneous"]
    else:
        lines = ["variables: " + " ".join(sf.variables)]
        lines += ["weights: " + " ".join(map(str, w.weights)) for w in probes]
        if not payload["unique"]:
            lines.append(f"the weight cone has {len(rays)} extreme rays; the grading is not unique")
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negder",
        description="Negative-degree derivations of quasihomogeneous complete intersections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="validate a system and decide negative derivations")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("counterexample", help="build and verify the codimension-two family")
    p.add_argument("--n", type=int, required=True, help="embedding dimension, at least 6")
    p.add_argument("--c", help="comma-separated constants c_7,...,c_n (default 2,3,...)")
    p.add_argument("--out", help="write the system file here instead of stdout")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("oracle", help="dimensions of graded derivation pieces by linear algebra")
    p.add_argument("file")
    p.add_argument("--degrees", required=True, metavar="LO..HI")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("infer-weights", help="positive gradings making the equations homogeneous")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_infer_weights)
    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse would read "--degrees -3..-1" as two options
    out = []
    it = iter(argv)
    for token in it:
        if token in ("--degrees", "--c"):
            value = next(it, None)
            out.append(token if value is None else f"{token}={value}")
        else:
            out.append(token)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except (SystemFileError, ValidationError, PolynomialError, CounterexampleParamsError,
            InputError, OSError, ValueError) as exc:
        print(f"negder: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GroebnerBudgetExceeded as exc:
        print(f"negder: resource limit: {exc} (raise NEGDER_GB_BUDGET)", file=sys.stderr)
        return EXIT_RESOURCE
    except (TheoryViolation, VerificationFailure) as exc:
        print(f"negder: theory violation: {exc}", file=sys.stderr)
        return EXIT_THEORY


if __name__ == "__main__":
    sys.exit(main())
