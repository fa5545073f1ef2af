"""Euler products for the recipe side.

    Z(A,B)    = prod_{alpha in A, beta in B} zeta(1 + alpha + beta)
    Z_p(A,B)  = prod_{alpha, beta} (1 - p^{-1-alpha-beta})
    local(p)  = Z_p(A,B) * sum_j tau_A(p^j) tau_B(p^j) p^{-j}
    A(A,B)    = prod_{p <= P} local(p)       (arithmetic factor)
    B(A,B)    = A(A,B) * Z(A,B)              (combined factor)

The j-sum is the closed form of the theta integral int_0^1 A_{p,theta} dtheta;
the direct quadrature version is kept alongside so tests can confirm the
equivalence.  The local series runs to at least the configured cutoff J and
then on to numerical convergence, so small primes with slowly decaying
terms are still summed accurately.
"""

from dataclasses import dataclass

import numpy as np

from ..arith.ntheory import _tau_pp_row, primes_up_to
from ..arith.shifts import ShiftMultiset
from ..errors import DomainError, PoleError
from .zeta import zeta


@dataclass(frozen=True)
class EulerProductConfig:
    """Truncation knobs for arithmetic-factor evaluation."""

    prime_cutoff: int = 100_000
    local_series_cutoff: int = 40
    tail_estimate_mode: str = "none"   # "none" | "integral"

    def __post_init__(self):
        if self.prime_cutoff < 2:
            raise DomainError("prime_cutoff must be >= 2")
        if self.local_series_cutoff < 8:
            raise DomainError("local_series_cutoff must be >= 8")
        if self.tail_estimate_mode not in ("none", "integral"):
            raise DomainError("tail_estimate_mode must be 'none' or 'integral'")


DEFAULT_EULER_CONFIG = EulerProductConfig()


class ArithmeticFactorValue(complex):
    """The truncated Euler product, carrying its truncation diagnostics."""

    def __new__(cls, value, truncation_error=0.0, prime_cutoff=0):
        self = super().__new__(cls, value)
        self.truncation_error = float(truncation_error)
        self.prime_cutoff = int(prime_cutoff)
        return self


# ---- pairwise zeta product ----


def z_pair(A, B):
    """Z(A,B) = prod zeta(1 + alpha + beta); empty product is 1."""
    A = ShiftMultiset.of(A)
    B = ShiftMultiset.of(B)
    out = 1.0 + 0.0j
    for a in A:
        for b in B:
            if a + b == 0:
                raise PoleError(
                    f"alpha + beta = 0 for alpha={a}, beta={b}; "
                    "perturb the shifts before calling", location=a + b)
            out *= zeta(1.0 + a + b)
    return out


# ---- local factors ----


def local_series(p, A, B, J=40):
    """sum_j tau_A(p^j) tau_B(p^j) p^{-j}, summed to convergence.

    Runs at least J terms, then continues until three consecutive terms
    fall below 1e-15 of the running total.
    """
    A = ShiftMultiset.of(A)
    B = ShiftMultiset.of(B)
    jmax = max(int(J), 16)
    while True:
        ra = _tau_pp_row(A.shifts, p, jmax)
        rb = _tau_pp_row(B.shifts, p, jmax)
        total = 1.0 + 0.0j
        pj = 1.0
        quiet = 0
        for j in range(1, jmax + 1):
            pj /= p
            term = ra[j] * rb[j] * pj
            total += term
            if abs(term) <= 1e-15 * max(abs(total), 1e-300):
                quiet += 1
                if quiet >= 3 and j >= J:
                    return total
            else:
                quiet = 0
        jmax *= 2
        if jmax > 1 << 14:
            raise DomainError("local series failed to converge; shifts too large")


def local_theta_integral(p, A, B, n_theta=256):
    """int_0^1 prod_{alpha} z_{p,-theta}(1/2+alpha) prod_{beta} z_{p,theta}(1/2+beta) dtheta
    by the periodic trapezoid rule, z_{p,theta}(x) = (1 - e(theta) p^{-x})^{-1}.

    Must match local_series to high accuracy; kept for that cross-check.
    """
    A = ShiftMultiset.of(A)
    B = ShiftMultiset.of(B)
    theta = np.arange(n_theta) / n_theta
    em = np.exp(-2j * np.pi * theta)
    ep = np.exp(2j * np.pi * theta)
    vals = np.ones(n_theta, dtype=complex)
    for a in A:
        vals /= 1.0 - em * p ** (-0.5 - a)
    for b in B:
        vals /= 1.0 - ep * p ** (-0.5 - b)
    return complex(np.mean(vals))


def local_factor(p, A, B, J=40):
    """Z_p(A,B) times the local series.

    Singleton-against-singleton (and smaller) configurations are exactly 1:
    the series is geometric and cancels Z_p identically, so that closed
    form is used directly.
    """
    A = ShiftMultiset.of(A)
    B = ShiftMultiset.of(B)
    if len(A) == 0 or len(B) == 0 or (len(A) == 1 and len(B) == 1):
        # the series is geometric (or trivial) and cancels Z_p exactly
        return 1.0 + 0.0j
    zp = 1.0 + 0.0j
    for a in A:
        for b in B:
            zp *= 1.0 - p ** (-1.0 - a - b)
    return zp * local_series(p, A, B, J)


# ---- the arithmetic factor ----


def _tail_integral(P):
    """int_P^inf u^{-2} / log u du = (1/P) int_0^1 dt / (log P - log t)."""
    x, w = np.polynomial.legendre.leggauss(64)
    t = 0.5 * (x + 1.0)
    vals = 1.0 / (np.log(P) - np.log(t))
    return float(np.sum(0.5 * w * vals) / P)


def arithmetic_factor(A, B, cfg=DEFAULT_EULER_CONFIG):
    """prod_{p <= P} local_factor(p, A, B) with an optional fitted tail.

    The tail model is local(p) - 1 ~ c/p^2, fitted over the last decade of
    primes and integrated against the prime density 1/log u.  Returns the
    value with ``truncation_error`` attached.
    """
    A = ShiftMultiset.of(A)
    B = ShiftMultiset.of(B)
    if len(A) == 0 or len(B) == 0 or (len(A) == 1 and len(B) == 1):
        # every local factor is exactly 1 (geometric identity)
        return ArithmeticFactorValue(1.0, 0.0, cfg.prime_cutoff)
    ps = primes_up_to(cfg.prime_cutoff)
    total = 1.0 + 0.0j
    c_acc = 0.0 + 0.0j
    c_count = 0
    decade = cfg.prime_cutoff / 10.0
    for p in ps:
        p = int(p)
        loc = local_factor(p, A, B, cfg.local_series_cutoff)
        total *= loc
        if p > decade:
            c_acc += (loc - 1.0) * p * p
            c_count += 1
    tail_log = 0.0 + 0.0j
    if c_count:
        tail_log = (c_acc / c_count) * _tail_integral(float(cfg.prime_cutoff))
    if cfg.tail_estimate_mode == "integral":
        value = total * np.exp(tail_log)
        err = 0.5 * abs(tail_log) * abs(value)
    else:
        value = total
        err = abs(tail_log) * abs(value)
    return ArithmeticFactorValue(value, err, cfg.prime_cutoff)


def b_pair(A, B, cfg=DEFAULT_EULER_CONFIG):
    """B(A,B) = A(A,B) * Z(A,B), the combined factor of the recipe."""
    return complex(arithmetic_factor(A, B, cfg)) * z_pair(A, B)
