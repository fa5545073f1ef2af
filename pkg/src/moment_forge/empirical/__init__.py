"""Empirical side: direct mean squares, shifted correlations, Farey
frames, and the comparison reports against the predictions."""

from .compare import MomentReport, compare_moment
from .correlation import (CorrelationValue, correlation_sum,
                          correlation_vs_prediction)
from .farey import FareyFrame, automorphism_count, farey_decompose
from .meansquare import (DEFAULT_PAIR_BUDGET, MeanSquareValue, MomentSpec,
                         dirichlet_mean_square, log_table, naive_mean_square,
                         pair_estimate)

__all__ = [
    "CorrelationValue",
    "DEFAULT_PAIR_BUDGET",
    "FareyFrame",
    "MeanSquareValue",
    "MomentReport",
    "MomentSpec",
    "automorphism_count",
    "compare_moment",
    "correlation_sum",
    "correlation_vs_prediction",
    "dirichlet_mean_square",
    "farey_decompose",
    "log_table",
    "naive_mean_square",
    "pair_estimate",
]
