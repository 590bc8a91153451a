"""Independent reference computations used to cross-check the engine."""

from itertools import product

from negder.linalg import rank
from negder.poly import Polynomial, monomials_of_degree


def truncated_membership(p: Polynomial, gens, weights=None) -> bool:
    """Membership of a homogeneous p by linear algebra in its own degree.

    For homogeneous generators the degree-D part of the ideal is spanned by
    the products x^a * g with deg(x^a) + deg(g) = D, so p lies in the ideal
    iff it lies in that span.
    """
    n = p.nvars
    weights = weights or (1,) * n
    if p.is_zero():
        return True
    deg = _degree(p, weights)
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        for a in monomials_of_degree(weights, deg - _degree(g, weights)):
            rows.append(Polynomial.monomial(a) * g)
    if not rows:
        return False
    columns = sorted({e for r in rows + [p] for e in r.terms})
    matrix = [[r.coefficient(e) for e in columns] for r in rows]
    return rank(matrix + [[p.coefficient(e) for e in columns]]) == rank(matrix)


def _degree(p, weights):
    degrees = {sum(w * x for w, x in zip(weights, e)) for e in p.terms}
    assert len(degrees) == 1, "not homogeneous"
    return degrees.pop()


def all_exponents(n, max_exp):
    return product(range(max_exp + 1), repeat=n)
