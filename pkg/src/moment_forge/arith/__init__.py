"""Arithmetic building blocks: shift multisets, divisor tables, the smooth
window, Ramanujan sums, and the local factor G."""

from .ntheory import (divisors, factorize, g_local, g_over_q, mobius,
                      primes_up_to, ramanujan_sum, tau_prime_power)
from .shifts import ShiftMultiset
from .sieve import DivisorTable, tau_table
from .window import (Window, bump, default_window, window_eval,
                     window_transform)

__all__ = [
    "ShiftMultiset", "DivisorTable", "tau_table", "Window", "bump",
    "default_window", "window_eval", "window_transform", "primes_up_to",
    "factorize", "mobius", "divisors", "ramanujan_sum", "tau_prime_power",
    "g_local", "g_over_q",
]
