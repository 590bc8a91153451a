"""Exact computations with negative-degree derivations on quasihomogeneous complete intersections."""

from .poly import (
    INHOMOGENEOUS,
    Polynomial,
    WeightSystem,
    determinant,
    order_of,
    parse_polynomial,
    partial_derivative,
    render,
    substitute,
    weighted_degree,
)
from .groebner import (
    GroebnerBasis,
    MonomialOrder,
    groebner_basis,
    is_zero_dimensional,
    krull_dimension,
    normal_form,
)
from .derivations import (
    Derivation,
    apply,
    derivation_degree,
    euler,
    jacobian_minors,
    trivial_derivation,
)
from .singularity import (
    SingularitySystem,
    condition_A,
    condition_B,
    infer_weights,
    is_complete_intersection,
    is_isolated,
    is_normal_icis,
    lemma12_check,
    validate_system,
)
from .analysis import (
    derivation_space,
    embdim5_check,
    grading_independence_check,
    halperin_bound,
    has_negative_derivations,
    min_trivial_degree,
    oracle_sweep,
    reduce_negative_derivation,
    theorem0_check,
)
from .counterexamples import CounterexampleParams, build_counterexample, verify_counterexample

__version__ = "0.1.0"
