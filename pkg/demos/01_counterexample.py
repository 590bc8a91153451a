"""A normal ICIS of codimension two carrying a derivation of degree -1.

Six variables with weights (8, 8, 5, 2, 2, 2) and two equations of degree 10.
Derivations of the quotient are generated by the Euler field and the
Jacobian-determinant fields delta_nu, so it suffices to find one delta_nu of
negative degree. The smallest such degree is 10 + 10 - (8 + 8 + 5) = -1.

Run: python demos/01_counterexample.py
"""

from negder import (
    CounterexampleParams,
    build_counterexample,
    derivation_space,
    has_negative_derivations,
    is_isolated,
    verify_counterexample,
)
from negder.derivations import apply

s, eta = build_counterexample(CounterexampleParams(6))

print("equations")
for j, text in enumerate(s.equations_text(), start=1):
    print(f"  g{j} = {text}")
print(f"weights {s.w.weights}, degrees {s.p}, dimension d = {s.d}")

# isolatedness: the Jacobian minors together with the equations cut out the
# origin only, which shows up as a pure power of every variable in a basis
cert = is_isolated(s)
print(f"\nisolated: {cert.isolated}; pure powers in the basis: {cert.pure_powers}")

print("\nthe derivation of degree -1")
for i, q in enumerate(eta.render(s.variables), start=1):
    if q != "0":
        print(f"  coefficient of d/dx{i}: {q}")
print("  eta(g_j):", [str(apply(eta, g)) for g in s.g])

verdict = has_negative_derivations(s)
print(f"\ngenerator rule: negative derivations exist = {verdict.exists}, smallest degree {verdict.min_degree}")

# cross-check by solving the linear system degree by degree
for degree in (-3, -2, -1):
    space = derivation_space(s, degree)
    print(f"  degree {degree}: dimension {space.dimension}")
print("  eta spans the degree -1 piece:", derivation_space(s, -1).contains_class(eta))

# adding variables x7, x8, ... with fifth powers keeps everything intact
for n, c in [(7, (2,)), (8, (2, 3))]:
    cert = verify_counterexample(CounterexampleParams(n, c))
    print(f"\nn = {n}, c = {c}: all checks passed = {cert['passed']} ({cert['seconds']:.2f}s)")
