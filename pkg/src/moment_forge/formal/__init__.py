"""Exact truncated-series engine over shift symbols and the identity
verifications built on it."""

from .identities import (Certificate, run_verification, semidiagonal_sides,
                         theorem2_sides, verify_lemma1, verify_semidiagonal,
                         verify_theorem2)
from .laurent import ONE, ZERO, LaurentPoly, neg, sym, ymul, ypow
from .series import (FormalSeries, SeqFun, as_fun, c_op, f_op, plus_fun,
                     set_fun, shift_fun, star, z_op)

__all__ = [
    "Certificate",
    "FormalSeries",
    "LaurentPoly",
    "ONE",
    "SeqFun",
    "ZERO",
    "as_fun",
    "c_op",
    "f_op",
    "neg",
    "plus_fun",
    "run_verification",
    "semidiagonal_sides",
    "set_fun",
    "shift_fun",
    "star",
    "sym",
    "theorem2_sides",
    "verify_lemma1",
    "verify_semidiagonal",
    "verify_theorem2",
    "ymul",
    "ypow",
    "z_op",
]
