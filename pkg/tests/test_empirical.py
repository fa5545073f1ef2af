"""Direct mean squares, correlations, Farey frames, and the comparison."""

import math

import numpy as np
import pytest

import frozen
from moment_forge.arith import ShiftMultiset, default_window, tau_table
from moment_forge.empirical import (DEFAULT_PAIR_BUDGET, FareyFrame,
                                    MomentSpec, automorphism_count,
                                    compare_moment, correlation_sum,
                                    correlation_vs_prediction,
                                    dirichlet_mean_square, farey_decompose,
                                    log_table, naive_mean_square,
                                    pair_estimate)
from moment_forge.errors import BudgetError, DomainError


def _spec(A, B, T, X):
    return MomentSpec(ShiftMultiset.of(A), ShiftMultiset.of(B), T, X)


# ---- spec validation ----

def test_moment_spec_validation():
    with pytest.raises(DomainError):
        _spec([0.01], [0.02], 50.0, 1000)
    with pytest.raises(DomainError):
        _spec([0.01], [0.02], 200.0, 1)
    spec = _spec([0.01], [0.02], 200.0, 1000)
    assert spec.window is default_window()
    assert 27.0 < spec.W < 30.5


def test_log_table_layout():
    lm = log_table(5)
    assert lm.shape == (6,)
    assert lm[0] == 0.0 and lm[1] == 0.0
    assert lm[4] == pytest.approx(math.log(4.0), rel=1e-15)


def test_pair_estimate_is_superset_count():
    spec = _spec([0.01], [0.02], 200.0, 400)
    est = pair_estimate(400, 200.0, spec.W)
    got = dirichlet_mean_square(spec, strategy="sweep")
    assert got.pairs_visited > 0
    assert est >= got.pairs_visited


# ---- mean-square strategies ----

def test_naive_full_matches_frozen_pair_sum():
    spec = _spec([0.01], [0.02], 200.0, 50)
    got = naive_mean_square(spec, apply_cutoff=False)
    assert abs(complex(got) - frozen.PAIR_SUM_T200_X50) \
        < 1e-12 * abs(frozen.PAIR_SUM_T200_X50)


def test_naive_cutoff_matches_sweep():
    for X in (300, 1000):
        spec = _spec([0.01], [0.02], 150.0, X)
        a = complex(naive_mean_square(spec))
        b = complex(dirichlet_mean_square(spec, strategy="sweep"))
        assert abs(a - b) <= 1e-10 * abs(b)


def test_spectral_matches_sweep():
    spec = _spec([0.01], [0.02], 300.0, 3000)
    sw = dirichlet_mean_square(spec, strategy="sweep")
    sp = dirichlet_mean_square(spec, strategy="spectral")
    assert sw.strategy == "sweep" and sp.strategy == "spectral"
    assert abs(complex(sw) - complex(sp)) < 1e-6 * abs(complex(sw))


def test_conjugate_pair_value_is_real():
    A = ShiftMultiset([0.01 + 0.005j])
    spec = MomentSpec(A, A.conjugate(), 200.0, 500)
    got = complex(dirichlet_mean_square(spec, strategy="sweep"))
    assert got.real > 0
    assert abs(got.imag) < 1e-8 * got.real


def test_budget_error_only_for_explicit_sweep():
    spec = _spec([0.01], [0.02], 150.0, 30_000)
    with pytest.raises(BudgetError) as info:
        dirichlet_mean_square(spec, strategy="sweep", budget=1000)
    assert info.value.suggestion
    # auto quietly switches to the spectral path instead
    got = dirichlet_mean_square(spec, strategy="auto", budget=1000)
    assert got.strategy == "spectral"


def test_diagonal_only_matches_recipe_class_zero():
    from moment_forge.recipe import recipe_poly_moment
    spec = _spec([0.01, 0.04], [0.02], 200.0, 800)
    got = dirichlet_mean_square(spec, diagonal_only=True)
    assert got.strategy == "diagonal"
    want = recipe_poly_moment(spec.A, spec.B, 200.0, 800).per_class[0]
    assert abs(complex(got) - complex(want)) < 1e-10 * abs(complex(want))


def test_mean_square_value_diagnostics():
    spec = _spec([0.01], [0.02], 200.0, 400)
    got = dirichlet_mean_square(spec, strategy="sweep")
    assert got.wall_time >= 0.0
    assert got.pairs_visited >= 400   # at least the diagonal


# ---- correlation sums ----

def test_correlation_sum_matches_brute_loops():
    A = ShiftMultiset([0.05])
    B = ShiftMultiset([0.07])
    u, h = 200, 3
    got = correlation_sum(A, B, h, u)
    ta = tau_table(A, 2 * u + h).values
    tb = tau_table(B, 2 * u + h).values
    want_cumulative = complex(np.sum(ta[1:u + 1] * tb[1 + h:u + h + 1]))
    assert complex(got) == pytest.approx(want_cumulative, rel=1e-12)
    w = default_window()
    md = np.arange(u + 1, 2 * u)
    weights = w.eval(md / u)
    want_smoothed = complex(np.sum(weights * ta[md] * tb[md + h])
                            / np.sum(weights))
    assert got.smoothed == pytest.approx(want_smoothed, rel=1e-12)
    assert got.h == h and got.u == u


def test_correlation_sum_guards():
    A = ShiftMultiset([0.05])
    with pytest.raises(DomainError):
        correlation_sum(A, A, 0, 100)
    with pytest.raises(DomainError):
        correlation_sum(A, A, 1, 0)


def test_correlation_prediction_singleton_closed_form():
    # singleton singular series is exactly 1, so the prediction reduces to
    # u^(1-alpha-beta) times the window power moment
    A = ShiftMultiset([0.05])
    B = ShiftMultiset([0.07])
    u = 20_000
    rep = correlation_vs_prediction(A, B, 1, u, q_max=200)
    w = default_window()
    want = u * u ** (-0.12) * complex(w.power_moment(-0.12))
    assert complex(rep.predicted) == pytest.approx(want, rel=1e-9)
    assert rep.relative_error < 5e-2
    assert rep.diagnostics["tail_last_decade"] == 0.0


def test_correlation_prediction_rejects_zero_offset():
    A = ShiftMultiset([0.05])
    with pytest.raises(DomainError):
        correlation_vs_prediction(A, A, 0, 1000)
    with pytest.raises(DomainError):
        correlation_vs_prediction(A, A, -2, 1000)


# ---- comparison reports ----

def test_compare_small_instance():
    spec = _spec([0.01], [0.02], 200.0, 1000)
    rep = compare_moment(spec)
    assert rep.empirical is not None and rep.predicted is not None
    assert rep.relative_error < 0.05
    assert 0 in rep.per_class and 1 in rep.per_class
    assert rep.diagnostics["strategy"] == "sweep"


def test_compare_partial_report_predicted_failure():
    # repeated shifts break the recipe side only; the empirical sum is fine
    spec = _spec([0.01, 0.01], [0.02], 200.0, 500)
    rep = compare_moment(spec)
    assert rep.empirical is not None
    assert rep.predicted is None
    assert rep.relative_error is None
    assert "predicted_error" in rep.diagnostics


def test_compare_partial_report_empirical_failure():
    spec = _spec([0.01], [0.02], 150.0, 30_000)
    rep = compare_moment(spec, strategy="sweep", budget=1000)
    assert rep.empirical is None
    assert rep.predicted is not None
    assert "empirical_error" in rep.diagnostics


# ---- Farey frames ----

def test_farey_frozen_oracle():
    frame = farey_decompose(3, 4, 7, 9, 5)
    assert (frame.M, frame.N) == frozen.FAREY_3_7_Q5
    assert (frame.h1, frame.h2) == (1, -37)


def test_farey_frame_validation():
    with pytest.raises(DomainError):
        FareyFrame(3, 2, 5, 0, 0)    # M > N
    with pytest.raises(DomainError):
        FareyFrame(2, 4, 5, 0, 0)    # gcd != 1
    with pytest.raises(DomainError):
        farey_decompose(0, 1, 1, 1, 5)
    with pytest.raises(DomainError):
        farey_decompose(1, 1, 1, 1, 0)


def test_farey_identity_random_tuples():
    import random
    rng = random.Random(11)
    for _ in range(3000):
        m1 = rng.randint(1, 400)
        n1 = rng.randint(1, 400)
        m2 = rng.randint(1, 50)
        n2 = rng.randint(1, 50)
        Q = rng.randint(1, 30)
        fr = farey_decompose(m1, m2, n1, n2, Q)
        lhs = m1 * m2 * fr.M * fr.N - n1 * n2 * fr.M * fr.N
        rhs = fr.h1 * m2 * fr.M + fr.h2 * m1 * fr.N - fr.h1 * fr.h2
        assert lhs == rhs, (m1, m2, n1, n2, Q)


def test_farey_mediant_interval_membership():
    # the frame fraction owns the mediant interval around m1/n1 in the
    # order-Q sequence, with ties going to the lower mediant
    import random
    from fractions import Fraction
    rng = random.Random(23)
    for _ in range(300):
        m1 = rng.randint(1, 200)
        n1 = rng.randint(m1 + 1, 400)
        Q = rng.randint(1, 20)
        fr = farey_decompose(m1, 2, n1, 3, Q)
        assert 1 <= fr.N <= Q
        assert math.gcd(max(fr.M, 1), fr.N) == 1
        target = Fraction(m1, n1)
        seq = sorted({Fraction(M, N)
                      for N in range(1, Q + 1) for M in range(0, N + 1)})
        idx = seq.index(Fraction(fr.M, fr.N))
        if idx > 0:
            left = seq[idx - 1]
            lo = Fraction(left.numerator + fr.M, left.denominator + fr.N)
            assert target > lo
        if idx + 1 < len(seq):
            right = seq[idx + 1]
            hi = Fraction(fr.M + right.numerator, fr.N + right.denominator)
            assert target <= hi


def test_farey_exact_hit_returns_the_fraction():
    fr = farey_decompose(3, 1, 7, 1, 7)
    assert (fr.M, fr.N) == (3, 7)
    assert (fr.h1, fr.h2) == (0, 1 * 3 - 1 * 7)


def test_automorphism_counts():
    assert automorphism_count(0, 0) == 1
    assert automorphism_count(1, 0) == 2
    assert automorphism_count(2, 2) == 16
    with pytest.raises(DomainError):
        automorphism_count(-1, 0)
    with pytest.raises(DomainError):
        automorphism_count(7, 6)
