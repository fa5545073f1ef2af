"""Moment laboratory for long Dirichlet polynomials.

Verifies truncated formal power-series identities exactly, evaluates
recipe-side moment predictions numerically, and checks both against
directly computed divisor-sum correlations and Dirichlet-polynomial mean
squares at desk scale.
"""

from .arith import (ShiftMultiset, Window, default_window, tau_table,
                    window_eval, window_transform)
from .errors import (BudgetError, CapacityError, DomainError,
                     MomentForgeError, PoleError)
from .formal import (Certificate, FormalSeries, LaurentPoly, SeqFun,
                     run_verification, verify_lemma1, verify_semidiagonal,
                     verify_theorem2)
from .recipe import (DEFAULT_EULER_CONFIG, EulerProductConfig, RecipeResult,
                     arithmetic_factor, b_pair, delta_average,
                     diagonal_series, local_factor, recipe_moment,
                     recipe_moment_perturbed, recipe_poly_moment,
                     recipe_poly_moment_perturbed, residue_r, residue_r_star,
                     swap_terms, zeta)
from .empirical import (MomentReport, MomentSpec, automorphism_count,
                        compare_moment, correlation_sum,
                        correlation_vs_prediction, dirichlet_mean_square,
                        farey_decompose, naive_mean_square)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CapacityError",
    "Certificate",
    "DEFAULT_EULER_CONFIG",
    "DomainError",
    "EulerProductConfig",
    "FormalSeries",
    "LaurentPoly",
    "MomentForgeError",
    "MomentReport",
    "MomentSpec",
    "PoleError",
    "RecipeResult",
    "SeqFun",
    "ShiftMultiset",
    "Window",
    "arithmetic_factor",
    "automorphism_count",
    "b_pair",
    "compare_moment",
    "correlation_sum",
    "correlation_vs_prediction",
    "default_window",
    "delta_average",
    "diagonal_series",
    "dirichlet_mean_square",
    "farey_decompose",
    "local_factor",
    "naive_mean_square",
    "recipe_moment",
    "recipe_moment_perturbed",
    "recipe_poly_moment",
    "recipe_poly_moment_perturbed",
    "residue_r",
    "residue_r_star",
    "run_verification",
    "swap_terms",
    "tau_table",
    "verify_lemma1",
    "verify_semidiagonal",
    "verify_theorem2",
    "window_eval",
    "window_transform",
    "zeta",
    "__version__",
]
