"""Farey frames for off-diagonal pair ratios, and the divisor-swap
automorphism count of a correlation tuple.

A pair (m1/n1, m2/n2) of ratios near 1 is charted by the order-Q Farey
fraction M/N whose mediant interval contains m1/n1; the frame offsets

    h1 = m1 N - n1 M,    h2 = m2 M - n2 N

then satisfy m1 m2 M N - n1 n2 M N = h1 m2 M + h2 m1 N - h1 h2
identically.  All arithmetic is exact integer arithmetic.
"""

from dataclasses import dataclass
from math import gcd

from ..errors import DomainError


@dataclass(frozen=True)
class FareyFrame:
    """A ratio pair charted against the Farey fraction M/N of order Q."""

    M: int
    N: int
    Q: int
    h1: int
    h2: int

    def __post_init__(self):
        if not (0 <= self.M <= self.N <= self.Q) or self.N < 1:
            raise DomainError("FareyFrame needs 0 <= M <= N <= Q, N >= 1")
        if gcd(self.M, self.N) != 1:
            raise DomainError("FareyFrame needs gcd(M, N) = 1")


def farey_decompose(m1, m2, n1, n2, Q):
    """Chart (m1/n1, m2/n2) in the order-Q Farey dissection.

    m1/n1 is reduced first, then walked down the Stern-Brocot tree: the
    containing fraction is the order-Q fraction whose mediant interval
    holds the ratio, with ties on a mediant boundary going to the lower
    fraction.  Ratios >= 1 clamp to 1/1; ratios below the first mediant
    land on the edge fraction 0/1.
    """
    for name, val in (("m1", m1), ("m2", m2), ("n1", n1), ("n2", n2)):
        if int(val) < 1:
            raise DomainError(f"farey_decompose needs {name} >= 1")
    Q = int(Q)
    if Q < 1:
        raise DomainError("farey_decompose needs Q >= 1")
    m1, m2, n1, n2 = int(m1), int(m2), int(n1), int(n2)
    g = gcd(m1, n1)
    p, q = m1 // g, n1 // g
    if p >= q:
        M, N = 1, 1
    else:
        # Stern-Brocot descent: (a/b, c/d) brackets p/q; stop when the
        # mediant leaves order Q, then pick the side of the mediant.
        a, b, c, d = 0, 1, 1, 1
        M = N = None
        while b + d <= Q:
            me, de = a + c, b + d
            cmp = p * de - q * me
            if cmp == 0:
                M, N = me, de   # exact hit: its own interval contains it
                break
            if cmp < 0:
                c, d = me, de
            else:
                a, b = me, de
        if M is None:
            # p/q strictly between neighbors a/b < c/d; the mediant
            # splits the gap, ties go to the lower fraction a/b
            if p * (b + d) <= q * (a + c):
                M, N = a, b
            else:
                M, N = c, d
    return FareyFrame(M, N, Q, m1 * N - n1 * M, m2 * M - n2 * N)


def automorphism_count(k, ell):
    """Count the divisor-swap symmetries of a correlation tuple whose m1
    has k distinct prime factors and n1 has ell.

    Builds a concrete squarefree tuple, applies every (mu | m1, nu | n1)
    swap (the divisor pair migrates between the numerators and the frame
    scales M, N), keeps only images that still satisfy both defining
    frame equations, and counts the distinct survivors.  The count is
    2^(k + ell): every swap survives.
    """
    k = int(k)
    ell = int(ell)
    if k < 0 or ell < 0:
        raise DomainError("automorphism_count needs k, ell >= 0")
    if k + ell > 12:
        raise DomainError("automorphism_count supports k + ell <= 12")
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43]
    m1 = 1
    for pr in primes[:k]:
        m1 *= pr
    n1 = 1
    for pr in primes[k:k + ell]:
        n1 *= pr
    M, N = 1, 1
    m2, n2 = primes[k + ell], primes[k + ell + 1]
    h1 = m1 * N - n1 * M
    h2 = m2 * M - n2 * N

    def divisors_of(primeset):
        out = [1]
        for pr in primeset:
            out += [d * pr for d in out]
        return out

    seen = set()
    for mu in divisors_of(primes[:k]):
        for nu in divisors_of(primes[k:k + ell]):
            # the swap moves mu out of m1 into (m2, N) and nu out of n1
            # into (n2, M); h1 is invariant, h2 picks up mu*nu
            Mt, Nt = nu * M, mu * N
            m1t, m2t = m1 // mu, mu * m2
            n1t, n2t = n1 // nu, nu * n2
            h1t, h2t = h1, mu * nu * h2
            if m1t * Nt - n1t * Mt != h1t:
                continue
            if m2t * Mt - n2t * Nt != h2t:
                continue
            seen.add((Mt, Nt, m1t, m2t, n1t, n2t, h1t, h2t))
    return len(seen)
