"""Exact graded Laurent-series calculus over cobordism coefficient rings."""

from .errors import TatecalcError
from .fgl import (
    BivariateTruncation,
    FGLContext,
    class_series,
    fgl_context,
    group_law,
    group_law_checks,
    log_prime,
    mu_exp,
    mu_log,
    to_additive_coordinate,
)
from .gradedring import (
    GradedPolynomial,
    RingDescriptor,
    designated_class,
    mu_rational,
    n_mod2,
    poly_add,
    poly_mul,
    preset,
)
from .series import (
    LaurentSeries,
    holomorphic_part,
    lagrange_reverse,
    principal_part,
    ser_add,
    ser_compose,
    ser_derivative,
    ser_invert,
    ser_mul,
    ser_pow,
    ser_residue,
    ser_reverse,
    shift,
)
from .tate import (
    MomentSequence,
    TateModel,
    boardman_by_projection,
    boardman_transform,
    is_holomorphic,
    moments_of,
    p_star_del,
    pi_series,
    reconstruct_from_moments,
    residue_functional,
)

__all__ = [
    "BivariateTruncation",
    "boardman_by_projection",
    "boardman_transform",
    "class_series",
    "designated_class",
    "fgl_context",
    "FGLContext",
    "GradedPolynomial",
    "group_law",
    "group_law_checks",
    "holomorphic_part",
    "is_holomorphic",
    "lagrange_reverse",
    "LaurentSeries",
    "log_prime",
    "moments_of",
    "MomentSequence",
    "mu_exp",
    "mu_log",
    "mu_rational",
    "n_mod2",
    "p_star_del",
    "pi_series",
    "poly_add",
    "poly_mul",
    "preset",
    "principal_part",
    "reconstruct_from_moments",
    "residue_functional",
    "RingDescriptor",
    "ser_add",
    "ser_compose",
    "ser_derivative",
    "ser_invert",
    "ser_mul",
    "ser_pow",
    "ser_residue",
    "ser_reverse",
    "shift",
    "TatecalcError",
    "TateModel",
    "to_additive_coordinate",
]

__version__ = "0.1.0"
