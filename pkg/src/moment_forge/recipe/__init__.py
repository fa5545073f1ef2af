"""Recipe-side predictions: zeta, Euler products, swap sums, residues."""

from .euler import (
    ArithmeticFactorValue,
    DEFAULT_EULER_CONFIG,
    EulerProductConfig,
    arithmetic_factor,
    b_pair,
    local_factor,
    local_series,
    local_theta_integral,
    z_pair,
)
from .residues import (
    DeltaAverageValue,
    ResidueStarValue,
    delta_average,
    residue_r,
    residue_r_star,
)
from .swaps import (
    RecipeResult,
    SwapTerm,
    diagonal_series,
    recipe_moment,
    recipe_moment_perturbed,
    recipe_poly_moment,
    recipe_poly_moment_perturbed,
    swap_terms,
)
from .zeta import zeta

__all__ = [
    "ArithmeticFactorValue",
    "DEFAULT_EULER_CONFIG",
    "DeltaAverageValue",
    "EulerProductConfig",
    "RecipeResult",
    "ResidueStarValue",
    "SwapTerm",
    "arithmetic_factor",
    "b_pair",
    "delta_average",
    "diagonal_series",
    "local_factor",
    "local_series",
    "local_theta_integral",
    "recipe_moment",
    "recipe_moment_perturbed",
    "recipe_poly_moment",
    "recipe_poly_moment_perturbed",
    "residue_r",
    "residue_r_star",
    "swap_terms",
    "z_pair",
    "zeta",
]
