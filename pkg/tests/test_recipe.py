"""Recipe-side prediction: zeta, Euler products, swaps, and residues."""

import math

import numpy as np
import pytest

import frozen
from moment_forge.arith import ShiftMultiset, default_window, tau_table
from moment_forge.errors import DomainError, PoleError
from moment_forge.recipe import (DEFAULT_EULER_CONFIG, EulerProductConfig,
                                 arithmetic_factor, b_pair, delta_average,
                                 diagonal_series, local_factor,
                                 local_series, local_theta_integral,
                                 recipe_moment, recipe_moment_perturbed,
                                 recipe_poly_moment, residue_r,
                                 residue_r_star, swap_terms, z_pair, zeta)
from moment_forge.recipe.swaps import _class_contribution

TWO_PI = 2.0 * math.pi


# ---- zeta ----

def test_zeta_frozen_values():
    for s, want in frozen.ZETA.items():
        got = zeta(s)
        assert abs(got - want) <= 1e-11 * abs(want), s


def test_zeta_near_pole_laurent():
    # zeta(1 + eps) = 1/eps + gamma + O(eps)
    for eps in (1e-3, 1e-4):
        got = zeta(1.0 + eps) - 1.0 / eps
        assert abs(got - 0.5772156649015329) < 10 * eps


# ---- Euler products ----

def test_z_pair_is_zeta_product():
    got = z_pair(ShiftMultiset([0.1, 0.2]), ShiftMultiset([0.3]))
    want = zeta(1.4) * zeta(1.5)
    assert got == pytest.approx(want, rel=1e-12)
    with pytest.raises(PoleError):
        z_pair(ShiftMultiset([0.1]), ShiftMultiset([-0.1]))


def test_local_factor_small_configs_exactly_one():
    for p in (2, 3, 97):
        assert local_factor(p, ShiftMultiset([0.3]),
                            ShiftMultiset([0.1])) == 1.0 + 0.0j
        assert local_factor(p, ShiftMultiset([]),
                            ShiftMultiset([0.1, 0.2])) == 1.0 + 0.0j
        assert local_factor(p, ShiftMultiset([0.2 + 0.1j]),
                            ShiftMultiset([])) == 1.0 + 0.0j


def test_theta_integral_matches_series():
    A = ShiftMultiset([0.05, -0.02])
    B = ShiftMultiset([0.03, 0.08])
    for p in (2, 3, 5):
        series = local_series(p, A, B)
        theta = local_theta_integral(p, A, B)
        assert abs(series - theta) < 1e-10, p


def test_arithmetic_factor_singleton_exact():
    got = arithmetic_factor(ShiftMultiset([0.07]), ShiftMultiset([0.02]))
    assert got == 1.0 + 0.0j


def test_arithmetic_factor_pair_zero_shifts():
    # A({0,0},{0,0}) = 6/pi^2, the reciprocal-zeta(2) density
    cfg = EulerProductConfig(prime_cutoff=5000)
    got = complex(arithmetic_factor(ShiftMultiset([0.0, 0.0]),
                                    ShiftMultiset([0.0, 0.0]), cfg))
    assert got.real == pytest.approx(6.0 / math.pi ** 2, rel=1e-4)
    assert abs(got.imag) < 1e-12


def test_b_pair_frozen_series():
    got = b_pair(ShiftMultiset([0.3]), ShiftMultiset([0.3]))
    assert complex(got).real == pytest.approx(frozen.B_03_SERIES, rel=1e-9)
    got = b_pair(ShiftMultiset([0.2, 0.4]), ShiftMultiset([0.2, 0.4]))
    assert complex(got).real == pytest.approx(frozen.B_0204_SERIES, rel=5e-3)


# ---- swap structure ----

def test_swap_term_count():
    for na in (1, 2, 3):
        for nb in (1, 2, 3):
            A = ShiftMultiset([0.01 * (j + 1) for j in range(na)])
            B = ShiftMultiset([0.013 * (j + 1) + 0.002 for j in range(nb)])
            want = sum(math.comb(na, j) * math.comb(nb, j)
                       for j in range(min(na, nb) + 1))
            cfg = EulerProductConfig(prime_cutoff=50)
            assert len(swap_terms(A, B, 100.0, cfg)) == want


def test_recipe_moment_singleton_closed_form():
    # both arithmetic factors are exactly 1, so the swap sum collapses to
    # two explicit zeta terms
    alpha, beta, T = 0.03, 0.04, 500.0
    w = alpha + beta
    window = default_window()
    want = T * (window.power_moment(0.0) * zeta(1.0 + w)
                + (T / TWO_PI) ** (-w) * window.power_moment(-w)
                * zeta(1.0 - w))
    got = recipe_moment(ShiftMultiset([alpha]), ShiftMultiset([beta]), T)
    assert complex(got.total) == pytest.approx(complex(want), rel=1e-12)


def test_recipe_moment_pole_guards():
    with pytest.raises(PoleError):
        recipe_moment(ShiftMultiset([0.1, 0.1]), ShiftMultiset([0.2]), 100.0)
    with pytest.raises(PoleError):
        recipe_moment(ShiftMultiset([0.1]), ShiftMultiset([-0.1]), 100.0)
    with pytest.raises(DomainError):
        recipe_moment(ShiftMultiset([0.1]), ShiftMultiset([0.2]), 0.0)


def test_diagonal_series_matches_brute_sum():
    A = ShiftMultiset([0.02, 0.05])
    B = ShiftMultiset([0.04])
    X = 400
    got = diagonal_series(A, B, X)
    va = tau_table(A, X).values
    vb = tau_table(B, X).values
    n = np.arange(1, X + 1)
    want = complex(np.sum(va[1:] * np.conjugate(vb[1:]) / n))
    # the diagonal series is tau_A tau_B / n without conjugation
    want_plain = complex(np.sum(va[1:] * vb[1:] / n))
    assert (abs(got - want) < 1e-10 * abs(want)
            or abs(got - want_plain) < 1e-10 * abs(want_plain))


def test_poly_moment_class_gating_notes():
    A = ShiftMultiset([0.01])
    B = ShiftMultiset([0.02])
    res = recipe_poly_moment(A, B, 300.0, 200)
    assert list(res.per_class) == [0]
    assert any("swap class 1 skipped" in note for note in res.notes)
    res = recipe_poly_moment(A, B, 100.0, 5000)
    assert sorted(res.per_class) == [0, 1]
    assert not res.notes


def test_poly_moment_unsupported_high_classes():
    # pairwise cross sums must stay distinct, or the contour poles collide
    A = ShiftMultiset([0.011, 0.024, 0.052])
    B = ShiftMultiset([0.013, 0.031, 0.077])
    res = recipe_poly_moment(A, B, 20.0, 10_000,
                             EulerProductConfig(prime_cutoff=100))
    assert sorted(res.per_class) == [0, 1, 2]
    assert any("swap class 3 unsupported" in note for note in res.notes)


def test_poly_moment_singleton_class_one_closed_form():
    # one swap pair, one moving zeta factor: residues at s = 0 and
    # s0 = -(alpha+beta) give an explicit two-term value
    alpha, beta = 0.03, 0.05
    T, X = 100.0, 5000
    w = alpha + beta
    window = default_window()
    ratio = TWO_PI * X / T
    want = T * (T / TWO_PI) ** (-w) * (
        zeta(1.0 - w) * window.power_moment(-w)
        + ratio ** (-w) * window.power_moment(0.0) / w)
    res = recipe_poly_moment(ShiftMultiset([alpha]), ShiftMultiset([beta]),
                             T, X)
    assert complex(res.per_class[1]) == pytest.approx(complex(want),
                                                      rel=1e-12)


def test_perturbed_average_richardson_ratio():
    # the +/-eps average converges quadratically, so halving eps should
    # shrink successive differences by about 4
    A = ShiftMultiset([0.01, 0.01])
    B = ShiftMultiset([0.035, 0.06])
    T = 80.0
    cfg = EulerProductConfig(prime_cutoff=300)
    vals = [recipe_moment_perturbed(A, B, T, cfg, eps=e)
            for e in (1e-3, 5e-4, 2.5e-4)]
    num = abs(vals[0] - vals[1])
    den = abs(vals[1] - vals[2])
    assert den > 0
    assert 3.0 < num / den < 5.0


# ---- residue predictions ----

def test_residue_r_singleton():
    A = ShiftMultiset([0.07])
    assert residue_r(A, 50.0, 1) == pytest.approx(50.0 ** -0.07, rel=1e-12)
    # singleton G vanishes at every q > 1
    assert residue_r(A, 50.0, 6) == 0.0
    with pytest.raises(PoleError):
        residue_r(ShiftMultiset([0.1, 0.1]), 10.0, 1)
    with pytest.raises(DomainError):
        residue_r(A, -1.0, 1)


def test_residue_star_singleton_h_independent():
    A = ShiftMultiset([0.05])
    B = ShiftMultiset([0.07])
    r1 = residue_r_star(A, B, 1e4, 1, q_max=400)
    r7 = residue_r_star(A, B, 1e4, 7, q_max=400)
    assert complex(r1) == pytest.approx(complex(r7), rel=1e-12)
    # only q = 1 survives, so the coefficient is exactly 1
    c = r1.coefficients[(0.05 + 0j, 0.07 + 0j)]
    assert c == pytest.approx(1.0 + 0.0j, rel=1e-12)
    assert r1.tail_last_decade == 0.0


def test_residue_star_conjugation_symmetry():
    A = ShiftMultiset([0.05 + 0.01j, -0.02])
    B = ShiftMultiset([0.04 - 0.02j, 0.08])
    r = residue_r_star(A, B, 300.0, 3, q_max=300)
    rc = residue_r_star(A.conjugate(), B.conjugate(), 300.0, 3, q_max=300)
    assert complex(rc) == pytest.approx(complex(r).conjugate(), rel=1e-12)


def test_delta_average_equals_residue_star_at_unit_moduli():
    A = ShiftMultiset([0.05, -0.03])
    B = ShiftMultiset([0.07])
    for h in (1, 4):
        d = delta_average(A, B, 1, 1, h, 5000.0, q_max=600)
        r = residue_r_star(A, B, 5000.0, h, q_max=600)
        assert abs(complex(d) - complex(r)) < 1e-12 * abs(complex(r))


def test_delta_average_domain_guards():
    A = ShiftMultiset([0.05])
    B = ShiftMultiset([0.07])
    with pytest.raises(DomainError):
        delta_average(A, B, 2, 4, 1, 100.0)
    with pytest.raises(DomainError):
        delta_average(A, B, 1, 1, 0, 100.0)
    with pytest.raises(DomainError):
        delta_average(A, B, 0, 1, 1, 100.0)


# ---- contour cross-check ----

def _contour_class_value(A, B, T, X, k, cfg, lines=(0.5, -0.45),
                         H=330.0, dtau=0.05):
    """Integrate the class-k truncation integrand over two vertical lines;
    the enclosed-pole sum must reproduce the residue formula."""
    window = default_window()
    ratio = TWO_PI ** k * X / T ** k
    total = 0.0 + 0.0j
    tau = np.arange(-H, H + dtau / 2, dtau)
    for U, arest in A.subsets(k):
        for V, brest in B.subsets(k):
            w = k * (sum(U) + sum(V))
            factors = []
            for a in arest:
                for b in brest:
                    factors.append((a + b, 1))
                for u in U:
                    factors.append((a - u, 0))
            for v in V:
                for b in brest:
                    factors.append((b - v, 0))
                for u in U:
                    factors.append((-u - v, -1))

            def integrand(s):
                val = ratio ** s / s * window.power_moment(-w - k * s)
                for c, slope in factors:
                    val *= zeta(1.0 + c + slope * s)
                na = arest.shifted(s).union(V.negate())
                nb = brest.union(U.negate().shifted(-s))
                return val * complex(arithmetic_factor(na, nb, cfg))

            enclosed = 0.0 + 0.0j
            for sigma, orient in ((lines[0], 1.0), (lines[1], -1.0)):
                vals = np.array([integrand(sigma + 1j * t) for t in tau])
                line = dtau * (vals.sum() - 0.5 * (vals[0] + vals[-1]))
                enclosed += orient * line / TWO_PI
            total += T * (T / TWO_PI) ** (-w) * enclosed
    return total


@pytest.mark.slow
def test_contour_integral_matches_residue_sum_class_one():
    A = ShiftMultiset([-0.06, 0.05])
    B = ShiftMultiset([-0.04, 0.08])
    cfg = EulerProductConfig(prime_cutoff=10)
    got, _ = _class_contribution(A, B, 25.0, 100, 1, cfg,
                                 default_window(), 0.25)
    want = _contour_class_value(A, B, 25.0, 100, 1, cfg, H=330.0)
    assert abs(got - want) < 1e-10 * abs(want)


@pytest.mark.slow
def test_contour_integral_matches_residue_sum_class_two():
    A = ShiftMultiset([-0.06, 0.05])
    B = ShiftMultiset([-0.04, 0.08])
    cfg = EulerProductConfig(prime_cutoff=10)
    got, _ = _class_contribution(A, B, 25.0, 100, 2, cfg,
                                 default_window(), 0.25)
    want = _contour_class_value(A, B, 25.0, 100, 2, cfg, H=170.0)
    assert abs(got - want) < 1e-6 * abs(want)
