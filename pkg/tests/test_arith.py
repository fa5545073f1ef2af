"""Arithmetic building blocks against brute-force loops and frozen values."""

import math

import numpy as np
import pytest

import frozen
from moment_forge.arith import (ShiftMultiset, bump, default_window, divisors,
                                factorize, g_local, g_over_q, mobius,
                                primes_up_to, ramanujan_sum, tau_prime_power,
                                tau_table, window_eval, window_transform)
from moment_forge.errors import CapacityError, DomainError


# ---- shift multisets ----

def test_multiset_sorted_and_hashable():
    a = ShiftMultiset([0.2, -0.1, 0.2])
    b = ShiftMultiset([-0.1, 0.2, 0.2])
    assert a == b
    assert hash(a) == hash(b)
    assert len(a) == 3
    assert a.shifts[0] == -0.1


def test_multiset_operations():
    a = ShiftMultiset([0.1, 0.2])
    assert a.union([0.1]).shifts == (0.1, 0.1, 0.2)
    assert a.remove(0.1).shifts == (0.2,)
    with pytest.raises(DomainError):
        a.remove(0.9)
    assert a.negate().shifts == (-0.2, -0.1)
    assert a.negate().negate() == a
    assert ShiftMultiset([0.1 + 0.3j]).conjugate().shifts == (0.1 - 0.3j,)
    assert a.shifted(1.0).shifts == (1.1, 1.2)
    assert not a.has_repeats()
    assert a.union([0.2]).has_repeats()


def test_multiset_subsets():
    a = ShiftMultiset([0.1, 0.2, 0.3])
    assert len(list(a.subsets(0))) == 1
    assert len(list(a.subsets(2))) == 3
    assert len(list(a.subsets(3))) == 1


# ---- elementary number theory ----

def test_primes_and_factorize():
    assert list(primes_up_to(20)) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert factorize(1) == ()


def test_mobius_divisors():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0,
                                                 0, 1]
    assert divisors(28) == [1, 2, 4, 7, 14, 28]


def test_ramanujan_sum():
    assert ramanujan_sum(2, 1) == frozen.RAMANUJAN_2_1
    assert ramanujan_sum(6, 3) == frozen.RAMANUJAN_6_3
    # brute check against the exponential-sum definition
    for q in range(1, 13):
        for h in range(1, 7):
            direct = sum(complex(math.cos(2 * math.pi * a * h / q),
                                 math.sin(2 * math.pi * a * h / q))
                         for a in range(1, q + 1) if math.gcd(a, q) == 1)
            assert abs(ramanujan_sum(q, h) - direct.real) < 1e-9


def test_tau_prime_power_matches_convolution():
    # tau_A(p^j) = sum over compositions of j into |A| parts
    A = (0.1, -0.2)
    p, j = 3, 4
    direct = sum(p ** (-0.1 * a - (-0.2) * (j - a)) for a in range(j + 1))
    assert abs(tau_prime_power(A, p, j) - direct) < 1e-12


# ---- divisor-sum tables ----

def test_tau_table_trivial_shift():
    # tau_{0,0,0}(4) counts ordered factorizations into three parts
    tab = tau_table(ShiftMultiset([0.0, 0.0, 0.0]), 10)
    assert abs(tab.values[4] - frozen.TAU_000_AT_4) < 1e-12


def test_tau_table_frozen_values():
    tab = tau_table(ShiftMultiset([0.1, 0.2]), 10)
    assert abs(tab.values[8] - frozen.TAU_01_02_AT_8) < 1e-10
    tab = tau_table(ShiftMultiset(frozen.TAU_CPLX_SHIFTS), 16)
    assert abs(tab.values[12] - frozen.TAU_CPLX_AT_12) < 1e-10


def test_tau_table_multiplicativity():
    tab = tau_table(ShiftMultiset([0.05, -0.03]), 100)
    v = tab.values
    for (m, n) in [(3, 4), (5, 7), (9, 10), (4, 25)]:
        assert abs(v[m * n] - v[m] * v[n]) < 1e-10


def test_tau_table_capacity_guard():
    with pytest.raises(CapacityError):
        tau_table(ShiftMultiset([0.0]), 1 << 25)


# ---- local factor G ----

def test_g_local_frozen():
    assert g_local(ShiftMultiset([0.0, 0.0]), 0.0, 2, 1) == pytest.approx(
        frozen.G_00_r1_p2, abs=1e-12)
    got = g_local(ShiftMultiset([0.1, 0.2]), 0.1, 3, 2)
    assert got == pytest.approx(frozen.G_01_02_r2_p3, rel=1e-9)
    got = g_local(ShiftMultiset(frozen.G_TRIPLE_SHIFTS), 0.2, 5, 3)
    assert got == pytest.approx(frozen.G_TRIPLE_r3_p5, rel=1e-9)


def test_g_singleton_vanishes_for_higher_powers():
    # G_{alpha}(1 - alpha, p^r) = 0 once r >= 2
    A = ShiftMultiset([0.07])
    for p in (2, 3, 11):
        assert abs(g_local(A, 0.07, p, 2)) < 1e-12
        assert abs(g_local(A, 0.07, p, 3)) < 1e-12


def test_g_over_q_multiplicative():
    A = ShiftMultiset([0.1, 0.2, -0.05])
    got = g_over_q(A, 0.1, 12)
    direct = g_local(A, 0.1, 2, 2) * g_local(A, 0.1, 3, 1)
    assert got == pytest.approx(direct, rel=1e-12)


# ---- smooth window ----

def test_bump_support():
    assert bump(1.0) == 0.0
    assert bump(2.0) == 0.0
    assert bump(0.5) == 0.0
    assert bump(2.5) == 0.0
    assert bump(1.5) == pytest.approx(math.exp(-4.0), rel=1e-12)
    arr = bump(np.array([0.9, 1.25, 1.5, 1.75, 2.1]))
    assert arr[0] == 0.0 and arr[-1] == 0.0
    assert arr[1] == arr[3]


def test_transform_at_zero_and_frozen_points():
    w = default_window()
    assert w.transform(0.0) == pytest.approx(frozen.PSI_HAT_0, rel=1e-10)
    for v, want in frozen.PSI_HAT.items():
        got = w.transform_direct(v)
        assert abs(got - want) <= 1e-13 + 1e-9 * abs(want), v


def test_transform_interpolation_agrees_with_quadrature():
    w = default_window()
    for v in (0.37, 1.91, 7.533, 24.99):
        assert abs(w.transform(v) - w.transform_direct(v)) < 5e-13


def test_transform_conjugate_symmetry():
    w = default_window()
    for v in (0.4, 3.7, 11.3):
        assert w.transform(-v) == pytest.approx(
            w.transform(v).conjugate(), rel=1e-12)


def test_support_radius_bracket():
    w = default_window()
    lo, hi = frozen.SUPPORT_RADIUS_1E10_BRACKET
    r = w.support_radius(1e-10)
    assert lo < r < hi
    assert abs(w.transform_direct(r + 1.0)) < 1e-10


def test_power_moment_matches_mellin_oracle():
    w = default_window()
    for e, want in frozen.PSI_MELLIN.items():
        assert complex(w.power_moment(e)) == pytest.approx(want, rel=1e-9)


def test_module_level_helpers():
    assert window_eval(1.5) == pytest.approx(math.exp(-4.0), rel=1e-12)
    assert window_transform(0.0) == pytest.approx(frozen.PSI_HAT_0, rel=1e-10)
