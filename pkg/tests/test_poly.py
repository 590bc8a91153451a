from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from negder.poly import (
    INHOMOGENEOUS,
    Polynomial,
    PolynomialError,
    PolynomialSyntaxError,
    WeightSystem,
    default_variables,
    determinant,
    leibniz_determinant,
    monomials_of_degree,
    order_of,
    parse_polynomial,
    partial_derivative,
    render,
    substitute,
    weighted_degree,
)

from conftest import polynomials

X6 = default_variables(6)
W6 = (8, 8, 5, 2, 2, 2)
G1 = "x1*x4 + x2*x5 + x3^2 - x4^5"


def P(text, variables=X6):
    return parse_polynomial(text, variables)


class TestParse:
    def test_two_terms(self):
        assert len(P("x1*x4 + x3^2")) == 2

    def test_first_family_equation(self):
        g1 = P(G1)
        assert len(g1) == 4
        assert g1.coefficient((0, 0, 0, 5, 0, 0)) == -1
        assert g1.coefficient((1, 0, 0, 1, 0, 0)) == 1

    def test_unknown_variable(self):
        with pytest.raises(PolynomialSyntaxError) as info:
            P("x1 + y")
        assert info.value.position == 5

    @pytest.mark.parametrize("text", ["x1 +", "x1 ** ", "(x1 + x2", "x1 x2", "3/0*x1", "x1^-2"])
    def test_syntax_errors(self, text):
        with pytest.raises(PolynomialError):
            P(text)

    def test_rationals_parentheses_and_unary_minus(self):
        p = P("1/2*x1 - (x2 - 3)^2", 2)
        assert p == Polynomial({(1, 0): Fraction(1, 2), (0, 2): -1, (0, 1): 6, (0, 0): -9}, 2)

    def test_power_alias(self):
        assert P("x1**3", 1) == P("x1^3", 1)

    def test_integer_variable_count(self):
        assert parse_polynomial("x2", 2) == Polynomial.variable(2, 2)

    @given(polynomials())
    def test_render_parse_roundtrip(self, p):
        assert parse_polynomial(render(p), p.nvars) == p


class TestArithmetic:
    @given(polynomials(), polynomials(), polynomials())
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(polynomials())
    def test_no_stored_zeros(self, p):
        assert all(c != 0 for c in p.terms.values())
        assert (p - p).is_zero()

    def test_equality_and_hash(self):
        a = Polynomial({(1, 0): 2, (0, 1): 0}, 2)
        b = Polynomial({(1, 0): Fraction(4, 2)}, 2)
        assert a == b and hash(a) == hash(b)

    def test_power(self):
        x = Polynomial.variable(1, 2)
        y = Polynomial.variable(2, 2)
        assert (x + y) ** 2 == x * x + 2 * x * y + y * y
        assert (x + y) ** 0 == Polynomial.constant(1, 2)

    def test_mixed_rings_rejected(self):
        with pytest.raises(PolynomialError):
            Polynomial.variable(1, 2) + Polynomial.variable(1, 3)


class TestWeights:
    def test_normalized_to_coprime(self):
        assert WeightSystem((4, 6)).weights == (2, 3)

    @pytest.mark.parametrize("bad", [(1, 0), (2, -1), ()])
    def test_invalid(self, bad):
        with pytest.raises(ValueError):
            WeightSystem(bad)

    def test_sortedness_flag(self):
        assert WeightSystem(W6).is_sorted
        assert not WeightSystem((1, 2)).is_sorted

    def test_family_degree(self):
        assert weighted_degree(P(G1), W6) == 10

    def test_constant_degree_zero(self):
        assert weighted_degree(Polynomial.constant(1, 6), W6) == 0

    def test_inhomogeneous_marker(self):
        assert weighted_degree(P("x1 + x3"), W6) == INHOMOGENEOUS

    def test_zero_has_no_degree(self):
        with pytest.raises(PolynomialError):
            weighted_degree(Polynomial.zero(2), (1, 1))

    def test_monomials_of_degree(self):
        assert sorted(monomials_of_degree((2, 1), 4)) == [(0, 4), (1, 2), (2, 0)]
        assert monomials_of_degree((2, 1), -1) == []
        assert monomials_of_degree((2, 1), 0) == [(0, 0)]


class TestOrder:
    def test_order_two(self):
        assert order_of(P("x3^2 + x1*x4")) == 2

    @pytest.mark.parametrize("n", [6, 7, 9])
    def test_family_order(self, n):
        assert order_of(parse_polynomial(G1 + "".join(f" + x{i}^5" for i in range(7, n + 1)), n)) == 2

    def test_order_three(self):
        assert order_of(P("x^3 + y^4", ["x", "y"])) == 3

    def test_zero_rejected(self):
        with pytest.raises(PolynomialError):
            order_of(Polynomial.zero(3))


class TestCalculus:
    def test_square(self):
        assert partial_derivative(P("x3^2"), 3) == P("2*x3")

    def test_family_entry(self):
        assert partial_derivative(P(G1), 4) == P("x1 - 5*x4^4")

    def test_constant(self):
        assert partial_derivative(Polynomial.constant(7, 6), 1).is_zero()

    def test_index_range(self):
        with pytest.raises(IndexError):
            partial_derivative(P("x1"), 7)

    @given(st.lists(st.integers(0, 4), min_size=3, max_size=3), st.data())
    def test_derivative_lowers_degree_by_weight(self, wlist, data):
        w = tuple(x + 1 for x in wlist)
        deg = data.draw(st.integers(2, 10))
        monos = monomials_of_degree(w, deg)
        if not monos:
            return
        chosen = data.draw(st.lists(st.sampled_from(monos), min_size=1, unique=True))
        p = Polynomial({e: k + 1 for k, e in enumerate(chosen)}, 3)
        for i in range(1, 4):
            d = partial_derivative(p, i)
            if not d.is_zero():
                assert weighted_degree(d, w) == deg - w[i - 1]

    def test_binomial_substitution(self):
        xk, t1 = Polynomial.variable(1, 2), Polynomial.variable(2, 2)
        assert substitute(xk**2, 1, xk + t1) == xk**2 + 2 * t1 * xk + t1**2

    def test_identity_substitution(self):
        p = P(G1)
        assert substitute(p, 1, Polynomial.variable(1, 6)) == p

    def test_monomial_substitution(self):
        x = [Polynomial.variable(i, 3) for i in (1, 2, 3)]
        assert substitute(x[0] * x[1], 2, x[2] ** 2) == x[0] * x[2] ** 2

    @given(polynomials(), polynomials(), polynomials(max_terms=3, max_exp=2))
    def test_substitution_is_a_ring_map(self, p, q, r):
        assert substitute(p * q, 2, r) == substitute(p, 2, r) * substitute(q, 2, r)
        assert substitute(p + q, 2, r) == substitute(p, 2, r) + substitute(q, 2, r)


class TestDeterminant:
    def test_minor_of_family(self):
        x4, x5, x6 = (Polynomial.variable(i, 6) for i in (4, 5, 6))
        assert determinant([[x4, x5], [x5, x6]]) == P("x4*x6 - x5^2")

    def test_identity(self):
        one, zero = Polynomial.constant(1, 2), Polynomial.zero(2)
        assert determinant([[one if i == j else zero for j in range(5)] for i in range(5)]) == one

    def test_non_square(self):
        with pytest.raises(PolynomialError):
            determinant([[Polynomial.variable(1, 2), Polynomial.variable(2, 2)]])

    def test_size_limit(self):
        one, zero = Polynomial.constant(1, 1), Polynomial.zero(1)
        with pytest.raises(PolynomialError):
            determinant([[one if i == j else zero for j in range(9)] for i in range(9)])

    @given(st.lists(polynomials(max_terms=3, max_exp=2), min_size=9, max_size=9), st.data())
    def test_alternating_and_multilinear(self, entries, data):
        M = [entries[0:3], entries[3:6], entries[6:9]]
        d = determinant(M)
        swapped = [M[1], M[0], M[2]]
        assert determinant(swapped) == -d
        assert determinant([M[0], M[0], M[2]]).is_zero()
        row = data.draw(st.lists(polynomials(max_terms=2, max_exp=2), min_size=3, max_size=3))
        c = data.draw(polynomials(max_terms=2, max_exp=1))
        mixed = [[a + c * b for a, b in zip(M[0], row)], M[1], M[2]]
        assert determinant(mixed) == d + c * determinant([row, M[1], M[2]])

    @given(st.lists(polynomials(max_terms=2, max_exp=2), min_size=25, max_size=25))
    def test_bareiss_matches_leibniz(self, entries):
        M = [entries[5 * i : 5 * i + 5] for i in range(5)]
        assert determinant(M) == leibniz_determinant(M)
