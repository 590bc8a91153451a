import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from negder.corpus import random_homogeneous, weight_grid
from negder.poly import parse_polynomial, weighted_degree
from negder.singularity import (
    EmbeddingDimensionError,
    InhomogeneousGeneratorError,
    ValidationError,
    condition_A,
    condition_B,
    cone_probes,
    dimension,
    infer_weights,
    inverse_permutation,
    is_complete_intersection,
    is_isolated,
    is_normal_icis,
    lemma12_check,
    validate_system,
    weight_cone_rays,
)


def P(text, n):
    return parse_polynomial(text, n)


def system(texts, weights, n=None):
    n = n or len(weights)
    return validate_system([P(t, n) for t in texts], weights)


SPHERE = (["x1^2 + x2^2 + x3^2"], (1, 1, 1))


class TestValidation:
    def test_family(self, example6):
        s, _ = example6
        assert s.p == (10, 10) and s.t == 2 and s.d == 4
        assert s.w.weights == (8, 8, 5, 2, 2, 2)

    def test_order_one(self):
        with pytest.raises(EmbeddingDimensionError):
            system(["x1"], (1, 1))

    def test_cusp(self):
        s = system(["x1^2 + x2^3"], (3, 2))
        assert s.p == (6,)

    def test_inhomogeneous_reports_monomials(self):
        with pytest.raises(InhomogeneousGeneratorError) as info:
            system(["x1 + x2^2"], (1, 1))
        assert info.value.index == 1
        assert info.value.degrees == {1: ["x1"], 2: ["x2^2"]}

    @pytest.mark.parametrize("weights", [(1, -1), (0, 1), (1, 1, 1)])
    def test_bad_weights(self, weights):
        with pytest.raises(ValidationError):
            validate_system([P("x1^2 + x2^2", 2)], weights)

    def test_too_many_equations(self):
        with pytest.raises(ValidationError):
            system(["x1^2", "x1^3", "x1^4"], (1, 1))

    def test_weights_normalized(self):
        assert system(["x1^2 + x2^3"], (6, 4)).w.weights == (3, 2)

    def test_sorting_records_permutations(self):
        s = system(["x1^3 + x2^2"], (2, 3))
        assert s.variables == ("x2", "x1")
        assert s.w.weights == (3, 2)
        assert s.variable_permutation == (1, 0)
        assert s.equations_text() == ["x1^3 + x2^2"]
        s = system(["x1^2", "x1^3 + x2^3"], (1, 1))
        assert s.p == (3, 2) and s.equation_permutation == (1, 0)

    @given(st.permutations(range(4)))
    def test_permutations_invert(self, perm):
        inv = inverse_permutation(perm)
        assert [perm[i] for i in inv] == list(range(4))
        assert [inv[i] for i in perm] == list(range(4))


class TestWeightInference:
    def test_family_has_a_single_ray(self, example6):
        s, _ = example6
        assert [w.weights for w in infer_weights(list(s.g))] == [(8, 8, 5, 2, 2, 2)]

    def test_cusp(self):
        assert [w.weights for w in infer_weights([P("x1^2 + x2^3", 2)])] == [(3, 2)]

    def test_linear(self):
        assert [w.weights for w in infer_weights([P("x1 + x2", 2)])] == [(1, 1)]

    def test_no_positive_grading(self):
        assert infer_weights([P("x1^2 + x1", 1)]) == []

    def test_two_dimensional_cone(self):
        g = [P("x1*x2 + x3^2", 3)]
        assert weight_cone_rays(g) == [(2, 0, 1), (0, 2, 1)]
        assert [w.weights for w in infer_weights(g)] == [(1, 1, 1)]
        assert [w.weights for w in cone_probes(g)] == [(1, 1, 1), (4, 2, 3), (2, 4, 3)]

    @given(st.sampled_from(weight_grid(3, 4)), st.integers(4, 12), st.integers(0, 10**6))
    def test_inferred_weights_make_every_equation_homogeneous(self, w, degree, seed):
        g = random_homogeneous(random.Random(seed), w, degree, min_order=1, density=0.5)
        if g.is_zero():
            return
        found = infer_weights([g])
        assert found, "the generating weights lie in the cone"
        for ws in cone_probes([g]):
            assert isinstance(weighted_degree(g, ws), int)


class TestIsolatedness:
    def test_family(self, example6):
        s, _ = example6
        cert = is_isolated(s)
        assert cert.isolated and sorted(cert.pure_powers) == [1, 2, 3, 4, 5, 6]

    def test_node_is_isolated(self):
        # the two axes meet only at the origin, which is the only singular point
        assert is_isolated(system(["x1*x2"], (1, 1)))

    def test_non_isolated_surface(self):
        assert not is_isolated(system(["x1*x2"], (1, 1, 1)))

    def test_sphere(self):
        assert is_isolated(system(*SPHERE))


class TestCompleteIntersection:
    def test_family(self, example6):
        s, _ = example6
        assert is_complete_intersection(s) and dimension(s) == 4

    def test_two_components(self):
        s = system(["x1*x2", "x1*x3"], (1, 1, 1))
        assert dimension(s) == 2 and not is_complete_intersection(s)

    def test_monomial_regular_sequence(self):
        s = system(["x1^2", "x2^2", "x3^2"], (1, 1, 1))
        assert is_complete_intersection(s) and s.d == 0

    def test_normality(self, example6):
        assert is_normal_icis(example6[0])
        assert not is_normal_icis(system(["x1^2 + x2^3"], (3, 2)))
        assert is_normal_icis(system(*SPHERE))


class TestConditions:
    def test_pure_square(self, example6):
        a = condition_A(example6[0], 3)
        assert (a.m, a.j) == (2, 1)

    def test_fifth_power(self, example6):
        a = condition_A(example6[0], 4)
        assert (a.m, a.j) == (5, 1)

    def test_no_pure_power_of_first_variable(self, example6):
        assert condition_A(example6[0], 1) is None

    def test_matching(self, example6):
        b = condition_B(example6[0], 1)
        assert b.nu == (4, 5) and b.exponents == (1, 1)

    def test_no_matching_for_third_variable(self, example6):
        assert condition_B(example6[0], 3) is None

    def test_hypersurface_without_mixed_monomial(self):
        assert condition_B(system(["x1^2 + x2^2"], (1, 1)), 1) is None

    def test_witnessed_monomials_occur(self, example6):
        s = example6[0]
        for k in range(1, 7):
            a, b = condition_A(s, k), condition_B(s, k)
            assert a or b
            if a:
                e = tuple(a.m if i == k - 1 else 0 for i in range(6))
                assert s.g[a.j - 1].coefficient(e) != 0
            if b:
                assert len(set(b.nu)) == s.t and k not in b.nu
                for j, (nu, m) in enumerate(zip(b.nu, b.exponents)):
                    e = [0] * 6
                    e[k - 1] += m
                    e[nu - 1] += 1
                    assert s.g[j].coefficient(tuple(e)) != 0

    def test_index_range(self, example6):
        with pytest.raises(IndexError):
            condition_A(example6[0], 7)


class TestDegreeInequalities:
    def test_family(self, example6):
        assert lemma12_check(example6[0]) == [True, True]

    def test_cusp(self):
        assert lemma12_check(system(["x1^2 + x2^3"], (3, 2))) == [True]

    def test_violation_goes_with_non_isolated(self):
        s = system(["x2^2 + x3^2"], (5, 1, 1))
        assert lemma12_check(s) == [False]
        assert not is_isolated(s)
