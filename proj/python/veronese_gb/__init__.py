"""Quadratic Groebner bases for Veronese subrings."""

from ._core import (
    BudgetExceeded,
    NotAConfiguration,
    ParseError,
    PreconditionError,
    VgbError,
    bounds,
    build_g_gamma,
    cmp_gamma_vars,
    enumerate_nds,
    find_weight_vector,
    gamma,
    groebner_basis,
    pullback_homogeneous,
    pullback_monomial,
    run_cli,
    toric_ideal,
    verify_quad_gb,
    verify_toric_veronese,
)

__all__ = [
    "BudgetExceeded",
    "NotAConfiguration",
    "ParseError",
    "PreconditionError",
    "VgbError",
    "bounds",
    "build_g_gamma",
    "cmp_gamma_vars",
    "enumerate_nds",
    "find_weight_vector",
    "gamma",
    "groebner_basis",
    "pullback_homogeneous",
    "pullback_monomial",
    "run_cli",
    "toric_ideal",
    "verify_quad_gb",
    "verify_toric_veronese",
]
