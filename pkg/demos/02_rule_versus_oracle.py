"""How the generator rule compares with brute-force linear algebra on random inputs.

For a normal ICIS the rule says negative derivations exist exactly when
p_1 + ... + p_t < w_1 + ... + w_{t+1}. The oracle ignores all theory and
solves for derivations preserving the ideal, one degree at a time. The two
are run side by side on a reproducible random corpus.

Run: python demos/02_rule_versus_oracle.py [count]
"""

import itertools
import sys

from negder import has_negative_derivations, oracle_sweep
from negder.corpus import normal_icis_stream

count = int(sys.argv[1]) if len(sys.argv) > 1 else 40
stream = normal_icis_stream(seed=2, shapes=[(3, 1), (4, 1), (4, 2)], max_weight=4, min_order=2, max_degree=10)

agree = positive = 0
for s in itertools.islice(stream, count):
    verdict = has_negative_derivations(s)
    lo = min(verdict.min_degree, -1)
    dims = oracle_sweep(s, lo, -1)
    oracle_says = any(dims.values())
    agree += oracle_says == verdict.exists
    positive += verdict.exists
    if verdict.exists:
        print(f"w={s.w.weights} p={s.p}: rule predicts degree {verdict.min_degree}, oracle {dims}")
        for text in s.equations_text():
            print(f"    {text}")

print(f"\n{agree}/{count} agree; negative derivations in {positive} of them")
# order >= 3 rules them out, so every hit above has an equation of order two
