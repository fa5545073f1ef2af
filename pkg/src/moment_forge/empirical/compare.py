"""Side-by-side report of a measured moment against its prediction."""

from dataclasses import dataclass, field

from ..errors import MomentForgeError
from ..recipe import DEFAULT_EULER_CONFIG, recipe_poly_moment
from .meansquare import DEFAULT_PAIR_BUDGET, dirichlet_mean_square


@dataclass
class MomentReport:
    """What was measured, what was predicted, and how far apart they are.

    Either side may be None when its computation failed; the failure
    reason then appears in ``diagnostics``.  ``relative_error`` is
    |empirical - predicted| / |predicted| when both sides exist.
    """

    empirical: complex = None
    predicted: complex = None
    per_class: dict = field(default_factory=dict)
    relative_error: float = None
    diagnostics: dict = field(default_factory=dict)


def compare_moment(spec, cfg=DEFAULT_EULER_CONFIG, strategy="auto",
                   budget=DEFAULT_PAIR_BUDGET):
    """Measure I(T; X) per ``spec`` and predict it from the swap-term sum.

    Both sides are attempted independently so a failure on one still
    produces a partial report.
    """
    report = MomentReport()
    try:
        emp = dirichlet_mean_square(spec, strategy=strategy, budget=budget)
        report.empirical = complex(emp)
        report.diagnostics.update(
            pairs_visited=emp.pairs_visited, strategy=emp.strategy,
            wall_time=emp.wall_time)
    except MomentForgeError as exc:
        report.diagnostics["empirical_error"] = str(exc)
    try:
        pred = recipe_poly_moment(spec.A, spec.B, spec.T, int(spec.X), cfg)
        report.predicted = complex(pred.total)
        report.per_class = dict(pred.per_class)
        report.diagnostics["notes"] = list(pred.notes)
        report.diagnostics["remainder_estimate"] = pred.remainder_estimate
    except MomentForgeError as exc:
        report.diagnostics["predicted_error"] = str(exc)
    if report.empirical is not None and report.predicted is not None \
            and report.predicted != 0:
        report.relative_error = (abs(report.empirical - report.predicted)
                                 / abs(report.predicted))
    return report
