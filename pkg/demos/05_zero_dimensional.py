"""Zero-dimensional complete intersections have no derivations below p_n - p_1.

With t = n there are no Jacobian-determinant fields, so the oracle is the
only tool. Degrees are sorted p_1 >= ... >= p_n.

Run: python demos/05_zero_dimensional.py
"""

from negder import halperin_bound, oracle_sweep
from negder.poly import parse_polynomial
from negder.singularity import validate_system

examples = [
    (["x1^2", "x2^2", "x3^2"], (1, 1, 1)),
    (["x1^4 + x2^4", "x1*x2"], (1, 1)),
    (["x1^3 + x2^6", "x2^4 + x1*x3", "x3^3"], (2, 1, 2)),
]
for texts, w in examples:
    n = len(w)
    s = validate_system([parse_polynomial(t, n) for t in texts], w)
    bound = halperin_bound(s)
    sweep = oracle_sweep(s, bound - 3, bound)
    print(f"{texts} w={w}: p={s.p}, nothing below {bound}; oracle {sweep}")
