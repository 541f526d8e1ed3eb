"""Bernstein-type inequalities for rational functions with prescribed poles.

Numerical construction of ``r = p/w`` with poles outside the unit disk,
Blaschke products, circle sup-norms, and pointwise checks of the
classical and refined derivative bounds.
"""

from .engine import (
    Case,
    CheckReport,
    NearSingularity,
    NormCache,
    SuiteReport,
    Tolerances,
    check_lemma,
    check_polynomial,
    check_rational,
    evaluate_check,
    lemma4_scalar,
    lhs_theorem21,
    rhs_corollary24,
    rhs_theorem21,
    run_suite,
)
from .generators import (
    InstanceSpec,
    boundary_cases,
    extremal_instance,
    gen_batch,
    gen_instance,
    gen_interior_instance,
)
from .norms import NormConfig, NormEstimate, norm_pair, sup_norm_circle
from .poly import Polynomial, poly_derivative, poly_eval, poly_from_roots, reverse_conjugate
from .rational import (
    CirclePoint,
    DomainError,
    HypothesisError,
    PoleSet,
    RationalFn,
    blaschke_as_rational,
    blaschke_derivative,
    blaschke_derivative_modulus,
    blaschke_eval,
    conjugate_transform,
    make_rational,
    rational_derivative_eval,
    rational_eval,
)

__version__ = "0.1.0"
