"""Which gradings make a system homogeneous, and when the choice matters.

The admissible weight vectors form a rational polyhedral cone. For the
codimension-two example the cone is a single ray. For the node
x1*x2 + x3^2 it is two-dimensional, and the answer to the negative-derivation
question changes with the grading: this is the one case where it is allowed
to, a hypersurface of order two.

Run: python demos/04_gradings.py
"""

from negder import CounterexampleParams, build_counterexample, has_negative_derivations
from negder.poly import parse_polynomial
from negder.singularity import cone_probes, validate_system, weight_cone_rays

s, _ = build_counterexample(CounterexampleParams(6))
print("codimension-two example: rays", weight_cone_rays(list(s.g)))

g = [parse_polynomial("x1*x2 + x3^2", 3)]
print("\nnode x1*x2 + x3^2: rays", weight_cone_rays(g))
for w in cone_probes(g):
    s = validate_system(g, w.weights)
    v = has_negative_derivations(s)
    print(f"  weights {w.weights}: p = {s.p}, smallest generator degree {v.min_degree}, "
          f"negative derivations {v.exists}")
# with weights (4, 2, 3) the field 2*x3 d/dx1 - x2 d/dx3 has degree -1
