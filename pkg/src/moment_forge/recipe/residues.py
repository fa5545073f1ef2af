"""Residue-type predictions for shifted divisor correlations.

    R_A(y,q)    = sum_{alpha in A} q^{alpha-1} prod_{a' != alpha} zeta(1-alpha+a')
                  * G_A(1-alpha, q) * y^{-alpha}
    R*_{A,B}(y;h) = sum_{q <= Q} r_q(h) R_A(y,q) R_B(y,q)
    delta_average  = the arithmetic main term of the averaged correlation
                  <tau_A(m) tau_B(n)> under m N - n M = h near m = u.

R* is regrouped as sum_{alpha,beta} c_{alpha,beta} y^{-alpha-beta} so the
coefficients can be reused by the correlation comparison.  delta_average
truncates its (d, q) sum at q*d <= q_max: substituting q = q'd in the
Ramanujan sum r_q(h) = sum_{d | (q,h)} d mu(q/d) shows that with this cut
the M = N = 1 case is an exact term-for-term rearrangement of R*.
"""

import math

from ..arith.ntheory import g_over_q, mobius, ramanujan_sum
from ..arith.shifts import ShiftMultiset
from ..errors import DomainError, PoleError
from .zeta import zeta


def _require_distinct(S, name):
    S = ShiftMultiset.of(S)
    if S.has_repeats():
        raise PoleError(
            f"repeated shifts in {name} give a higher-order pole; "
            "perturb them apart first")
    return S


class ResidueStarValue(complex):
    """R* partial sum with its regrouped coefficients and tail report."""

    def __new__(cls, value, coefficients, tail_last_decade, q_max):
        self = super().__new__(cls, value)
        self.coefficients = dict(coefficients)
        self.tail_last_decade = float(tail_last_decade)
        self.q_max = int(q_max)
        return self


class DeltaAverageValue(complex):
    """delta-method average with the same tail diagnostic as R*."""

    def __new__(cls, value, tail_last_decade, q_max):
        self = super().__new__(cls, value)
        self.tail_last_decade = float(tail_last_decade)
        self.q_max = int(q_max)
        return self


def residue_r(A, y, q):
    """R_A(y, q); shifts must be distinct (simple poles only)."""
    A = _require_distinct(A, "A")
    if y <= 0:
        raise DomainError("residue_r needs y > 0")
    if q < 1:
        raise DomainError("residue_r needs q >= 1")
    total = 0.0 + 0.0j
    for alpha in A:
        g = g_over_q(A, alpha, q)
        if g == 0.0:
            continue
        zprod = 1.0 + 0.0j
        for ap in A.remove(alpha):
            zprod *= zeta(1.0 - alpha + ap)
        total += q ** (alpha - 1.0) * zprod * g * y ** (-alpha)
    return total


def residue_r_star(A, B, y, h, q_max=10_000):
    """R*_{A,B}(y; h) truncated at q <= q_max.

    ``coefficients`` maps (alpha, beta) to c with value =
    sum c * y^(-alpha-beta); ``tail_last_decade`` is the magnitude of the
    q in (q_max/10, q_max] portion, a crude convergence indicator.
    """
    A = _require_distinct(A, "A")
    B = _require_distinct(B, "B")
    if y <= 0:
        raise DomainError("residue_r_star needs y > 0")
    if h < 1:
        raise DomainError("residue_r_star needs h >= 1")
    if q_max < 1:
        raise DomainError("residue_r_star needs q_max >= 1")
    zeta_a = {alpha: math.prod(
        (zeta(1.0 - alpha + ap) for ap in A.remove(alpha)), start=1.0 + 0.0j)
        for alpha in A}
    zeta_b = {beta: math.prod(
        (zeta(1.0 - beta + bp) for bp in B.remove(beta)), start=1.0 + 0.0j)
        for beta in B}
    s_sum = {(a, b): 0.0 + 0.0j for a in A for b in B}
    s_tail = {(a, b): 0.0 + 0.0j for a in A for b in B}
    decade = q_max / 10.0
    for q in range(1, q_max + 1):
        rq = ramanujan_sum(q, h)
        if rq == 0:
            continue
        ga = {alpha: g_over_q(A, alpha, q) for alpha in A}
        gb = {beta: g_over_q(B, beta, q) for beta in B}
        for alpha in A:
            if ga[alpha] == 0.0:
                continue
            for beta in B:
                if gb[beta] == 0.0:
                    continue
                term = rq * q ** (alpha + beta - 2.0) * ga[alpha] * gb[beta]
                s_sum[alpha, beta] += term
                if q > decade:
                    s_tail[alpha, beta] += term
    coefficients = {}
    value = 0.0 + 0.0j
    tail = 0.0 + 0.0j
    for alpha in A:
        for beta in B:
            c = zeta_a[alpha] * zeta_b[beta]
            coefficients[alpha, beta] = c * s_sum[alpha, beta]
            value += c * s_sum[alpha, beta] * y ** (-alpha - beta)
            tail += c * s_tail[alpha, beta] * y ** (-alpha - beta)
    return ResidueStarValue(value, coefficients, abs(tail), q_max)


def delta_average(A, B, M, N, h, u, q_max=10_000):
    """Predicted average of tau_A(m) tau_B(n) over m N - n M = h at m = u.

    M, N must be coprime positive integers; h nonzero (the h = 0 ridge is
    a different, semi-diagonal object).  Truncated at q*d <= q_max.
    """
    A = _require_distinct(A, "A")
    B = _require_distinct(B, "B")
    if M < 1 or N < 1:
        raise DomainError("delta_average needs positive moduli")
    if math.gcd(M, N) != 1:
        raise DomainError("delta_average needs gcd(M, N) = 1")
    if h == 0:
        raise DomainError("delta_average is undefined at h = 0 "
                          "(semi-diagonal ridge)")
    if u <= 0:
        raise DomainError("delta_average needs u > 0")
    habs = abs(int(h))
    hdivs = [d for d in range(1, habs + 1) if habs % d == 0]
    value = 0.0 + 0.0j
    tail = 0.0 + 0.0j
    decade = q_max / 10.0
    for alpha in A:
        za = math.prod((zeta(1.0 + ap - alpha) for ap in A.remove(alpha)),
                       start=1.0 + 0.0j)
        for beta in B:
            zb = math.prod((zeta(1.0 + bp - beta) for bp in B.remove(beta)),
                           start=1.0 + 0.0j)
            pref = (u ** (-alpha - beta) * M ** (-1.0 + beta) * N ** (-beta)
                    * za * zb)
            inner = 0.0 + 0.0j
            inner_tail = 0.0 + 0.0j
            for d in hdivs:
                dpart = d ** (-(1.0 - alpha - beta))
                for q in range(1, q_max // d + 1):
                    mu = mobius(q)
                    if mu == 0:
                        continue
                    qd = q * d
                    gm = math.gcd(qd, M)
                    gn = math.gcd(qd, N)
                    ga = g_over_q(A, alpha, qd // gn)
                    if ga == 0.0:
                        continue
                    gb = g_over_q(B, beta, qd // gm)
                    if gb == 0.0:
                        continue
                    term = (dpart * mu * gm ** (1.0 - beta)
                            * gn ** (1.0 - alpha)
                            * q ** (-(2.0 - alpha - beta)) * ga * gb)
                    inner += term
                    if qd > decade:
                        inner_tail += term
            value += pref * inner
            tail += pref * inner_tail
    return DeltaAverageValue(value, abs(tail), q_max)
