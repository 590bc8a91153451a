"""The coordinate-change reduction applied to negative derivations.

A negative derivation eta = sum q_i d/dx_i in triangular form (q_i depends
on x_{i+1}, ..., x_n only) is simplified variable by variable. When some
equation contains a pure power x_k^m, the substitution
x_k -> x_k + t_1 removes q_k. Where no pure power exists, there must be
mixed monomials x_k^m x_nu instead, and the procedure stops there.

Run: python demos/03_reduction.py
"""

from negder import CounterexampleParams, build_counterexample, reduce_negative_derivation
from negder.analysis import NonIsolatedError
from negder.derivations import Derivation, apply
from negder.poly import parse_polynomial
from negder.singularity import validate_system

s, eta = build_counterexample(CounterexampleParams(6))
result = reduce_negative_derivation(s, eta)
print("codimension-two example")
print(f"  stops at k = {result.k}: {result.witness.kind} with nu = {result.witness.nu}, "
      f"exponents {result.witness.exponents}")
print("  x1 appears only in x1*x4 and x1*x5, so no coordinate change can remove q_1")

# a non-reduced hypersurface: g = (x1 + x2^2)^2 + x3^4
g = parse_polynomial("x1^2 + 2*x1*x2^2 + x2^4 + x3^4", 3)
s = validate_system([g], (2, 1, 1))
eta = Derivation.from_text(["-2*x2", "1", "0"], 3, s.w)
print("\nhypersurface (x1 + x2^2)^2 + x3^4 with weights (2, 1, 1)")
print("  eta(g) =", apply(eta, g))
try:
    reduce_negative_derivation(s, eta)
except NonIsolatedError as exc:
    # x1 -> x1 - x2^2 turns eta into d/dx2 and g into x1^2 + x3^4, which does
    # not involve x2: the singular locus is a line
    print("  after x1 -> x1 - x2^2:", exc)
