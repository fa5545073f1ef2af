"""Riemann zeta by Euler-Maclaurin summation.

    zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
              + sum_{k=1..K} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{1-s-2k}

with K = 12 and N scaled to |Im s|.  Relative error <= 1e-12 throughout
|Im s| <= 50, Re s >= -1, which covers every zeta argument this package
forms from small shifts and contour points.
"""

from fractions import Fraction
from math import factorial

import numpy as np

from ..errors import PoleError

# B_2, B_4, ..., B_24 divided by (2k)!, exact then floated
_B2K = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6),
    Fraction(-3617, 510), Fraction(43867, 798), Fraction(-174611, 330),
    Fraction(854513, 138), Fraction(-236364091, 2730),
]
_COEF = [float(b / factorial(2 * k)) for k, b in enumerate(_B2K, start=1)]


def zeta(s):
    """zeta(s) for complex s != 1."""
    s = complex(s)
    if s == 1:
        raise PoleError("zeta has its pole at s = 1", location=1.0)
    n_cut = 20 + int(abs(s.imag))
    n = np.arange(1, n_cut)
    total = complex(np.sum(n ** (-s)))
    total += n_cut ** (1.0 - s) / (s - 1.0) + 0.5 * n_cut ** (-s)
    poch = s                      # s(s+1)...(s+2k-2), starts at length 1
    for k, c in enumerate(_COEF, start=1):
        total += c * poch * n_cut ** (1.0 - s - 2 * k)
        poch *= (s + 2 * k - 1) * (s + 2 * k)
    return total
