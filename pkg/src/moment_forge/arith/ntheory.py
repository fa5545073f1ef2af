"""Elementary number theory: primes, Mobius, Ramanujan sums, and the
local factor G_A(1-alpha, q).

G_A follows the prime-power formula

    G_A(1-alpha, p^r) = prod_{a in A'} (1 - p^{-(1+a-alpha)})
                        * sum_{j>=0} tau_{A'}(p^{j+r}) p^{-j(1-alpha)}

with A' = A - {alpha}, extended to composite q multiplicatively.  The
j-series is truncated adaptively to relative error 1e-12.
"""

import math
from functools import lru_cache

import numpy as np

from ..errors import DomainError
from .shifts import ShiftMultiset


def primes_up_to(limit):
    """All primes <= limit as an int64 array (simple Eratosthenes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(math.isqrt(limit)) + 1):
        if flags[p]:
            flags[p * p::p] = False
    return np.nonzero(flags)[0].astype(np.int64)


def factorize(n):
    """Prime factorization of n >= 1 as a tuple of (p, exponent) pairs."""
    if n < 1:
        raise DomainError("factorize needs n >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def mobius(n):
    """The Mobius function of n >= 1."""
    if n < 1:
        raise DomainError("mobius needs n >= 1")
    out = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        out = -out
    return out


def divisors(n):
    """All positive divisors of n, ascending."""
    out = [1]
    for p, e in factorize(n):
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


def ramanujan_sum(q, h):
    """r_q(h) = sum_{d | gcd(q, h)} d * mu(q / d), exactly."""
    if q < 1 or h < 1:
        raise DomainError("ramanujan_sum needs q >= 1 and h >= 1")
    g = math.gcd(q, h)
    return sum(d * mobius(q // d) for d in divisors(g))


# ---- generalized divisor values at prime powers ----


def tau_prime_power(shifts, p, j):
    """tau_A(p^j) = h_j({p^{-alpha}}), the complete homogeneous symmetric
    polynomial, by the standard one-variable-at-a-time recurrence."""
    shifts = ShiftMultiset.of(shifts)
    if j == 0:
        return 1.0 + 0.0j
    if len(shifts) == 0:
        return 0.0 + 0.0j
    h = np.zeros(j + 1, dtype=complex)
    h[0] = 1.0
    for a in shifts:
        x = p ** (-a)
        for m in range(1, j + 1):
            h[m] += x * h[m - 1]
    return complex(h[j])


def _tau_pp_row(shifts, p, jmax):
    """tau_A(p^j) for j = 0..jmax in one DP pass."""
    h = np.zeros(jmax + 1, dtype=complex)
    h[0] = 1.0
    for a in shifts:
        x = p ** (-complex(a))
        for m in range(1, jmax + 1):
            h[m] += x * h[m - 1]
    return h


# ---- the local factor G ----


@lru_cache(maxsize=1 << 16)
def _g_local_cached(shifts, alpha, p, r):
    rest = ShiftMultiset(shifts).remove(alpha)
    if len(rest) == 0:
        return 0.0 + 0.0j
    prod = 1.0 + 0.0j
    for a in rest:
        prod *= 1.0 - p ** (-(1.0 + a - alpha))
    decay = p ** (-(1.0 - alpha))
    jmax = max(16, r + 16)
    while True:
        row = _tau_pp_row(rest.shifts, p, jmax)
        total = 0.0 + 0.0j
        power = 1.0 + 0.0j
        quiet = 0
        for j in range(jmax - r + 1):
            term = row[j + r] * power
            total += term
            power *= decay
            if abs(term) <= 1e-12 * max(abs(total), 1e-300):
                quiet += 1
                if quiet >= 3 and j >= 8:
                    return prod * total
            else:
                quiet = 0
        jmax *= 2
        if jmax > 1 << 14:
            # |decay| < 1 is guaranteed for small shifts, so this is
            # unreachable in the supported domain; fail loudly if not
            raise DomainError("g_local series failed to converge")


def g_local(A, alpha, p, r):
    """G_A(1-alpha, p^r); alpha must be an element of A."""
    A = ShiftMultiset.of(A)
    alpha = complex(alpha)
    if alpha not in A:
        raise DomainError(f"alpha={alpha} is not a member of A={A.shifts}")
    if r < 0:
        raise DomainError("g_local needs r >= 0")
    if p < 2:
        raise DomainError("g_local needs a prime p >= 2")
    if r == 0:
        # the series telescopes against the product: G(., 1) = 1
        return 1.0 + 0.0j
    return _g_local_cached(A.shifts, alpha, p, r)


def g_over_q(A, alpha, q):
    """G_A(1-alpha, q) for composite q, multiplicatively over q's factors."""
    if q < 1:
        raise DomainError("g_over_q needs q >= 1")
    out = 1.0 + 0.0j
    for p, e in factorize(q):
        out *= g_local(A, alpha, p, e)
        if out == 0.0:
            break
    return out
