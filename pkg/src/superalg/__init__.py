"""Exact symbolic engine for Z2-graded noncommutative algebras with
nilpotent (Grassmann) deformation parameters.

The package bundles exact rational-function scalars, a graded free algebra
with oriented rewriting to normal forms, a registry of deformed superspace
presentations, graded 9x9 operator machinery (Yang-Baxter, matrix-relation
and covariance checks), the first order differential calculus with its star
structures, and the singular-limit contraction of the q-deformed family.
"""

from .algebra import Element, GeneratorTable, apply_morphism, mul, parity_of
from .calculus import (
    InvolutionSpec,
    differentiate,
    dsquare_check,
    duality_check,
    derivative_algebra_check,
    leibniz_check,
    partial,
    star_apply,
    star_relation_check,
    star_spec,
)
from .contraction import (
    BasisChange,
    CONTRACTION_TARGETS,
    LimitPoint,
    basis_change_for,
    contraction_check,
    take_limit,
    transform_relations,
)
from .errors import (
    MissingImageError,
    ParseError,
    PoleError,
    StepLimitExceeded,
    SuperalgError,
    TableMismatchError,
)
from .parser import parse, parse_element
from .presentations import (
    PRESENTATION_IDS,
    Presentation,
    basis_counts,
    build,
    enumerate_basis,
)
from .rewrite import (
    ReductionTrace,
    RewriteRule,
    RuleSet,
    check_confluence,
    critical_pairs,
    is_zero_mod,
    normalize,
)
from .scalars import Scalar, sc_frac, sc_int
from .supermatrix import (
    GradedOperator,
    PINNED_SIGN_VARIANT,
    check_coaction,
    check_rhat_space,
    check_rtt,
    check_ybe,
    compose,
    deformed_r_matrix,
    rhat,
    super_permutation,
    tensor_leg,
)

__all__ = [
    "BasisChange",
    "CONTRACTION_TARGETS",
    "Element",
    "GeneratorTable",
    "GradedOperator",
    "InvolutionSpec",
    "LimitPoint",
    "MissingImageError",
    "PINNED_SIGN_VARIANT",
    "PRESENTATION_IDS",
    "ParseError",
    "PoleError",
    "Presentation",
    "ReductionTrace",
    "RewriteRule",
    "RuleSet",
    "Scalar",
    "StepLimitExceeded",
    "SuperalgError",
    "TableMismatchError",
    "apply_morphism",
    "basis_change_for",
    "basis_counts",
    "build",
    "check_coaction",
    "check_confluence",
    "check_rhat_space",
    "check_rtt",
    "check_ybe",
    "compose",
    "contraction_check",
    "critical_pairs",
    "deformed_r_matrix",
    "derivative_algebra_check",
    "differentiate",
    "dsquare_check",
    "duality_check",
    "enumerate_basis",
    "is_zero_mod",
    "leibniz_check",
    "mul",
    "normalize",
    "parity_of",
    "parse",
    "parse_element",
    "partial",
    "rhat",
    "sc_frac",
    "sc_int",
    "star_apply",
    "star_relation_check",
    "star_spec",
    "super_permutation",
    "take_limit",
    "tensor_leg",
    "transform_relations",
]

__version__ = "0.1.0"
