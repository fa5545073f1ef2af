"""Swap-sum moment predictions.

The full prediction is a sum over equal-size subset swaps,

    I(T) = T * sum_{U in A, V in B, |U|=|V|}
               (T/2pi)^{-w} J(-w) B(A - U + V^-, B - V + U^-),

with w = |V|*sum(U) + |U|*sum(V) and J(e) = int_1^2 psi(t) t^e dt.

The truncated-polynomial prediction keeps, for each swap class k, only the
lengths X > T^k, replacing the class by an s-contour whose residues are
enumerated explicitly: the swapped configuration becomes

    A~(s) = (A - U) + s  union  {-v : v in V}
    B~(s) = (B - V)      union  {-u - s : u in U}

whose pairwise zeta product has factors linear in s.  Poles sit at s = 0
(restoring the plain swap term), at s = -a-b for remainder pairs (slope +1),
and at s = -u-v for swapped pairs (slope -1); each contributes

    T * (T/2pi)^{-w} * ((2pi)^k X / T^k)^{s0} * J(-w - k s0) * residue.

The 0-swap class is the exact truncated diagonal T * psi_hat(0) *
sum_{n<=X} tau_A(n) tau_B(n) / n; the empirical module imports
``diagonal_series`` so both sides of that comparison share one formula.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..arith.shifts import ShiftMultiset
from ..arith.sieve import tau_table
from ..arith.window import default_window
from ..errors import DomainError, PoleError
from .euler import DEFAULT_EULER_CONFIG, arithmetic_factor, b_pair
from .zeta import zeta

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SwapTerm:
    """One (U, V) swap: value = B(A-U+V^-, B-V+U^-), exponent = -w."""

    U: ShiftMultiset
    V: ShiftMultiset
    value: complex
    exponent: complex


class RecipeResult(tuple):
    """(total, breakdown) with attached diagnostics.

    ``breakdown`` is a list of SwapTerm for the full moment and a
    {swap_count: contribution} map for the truncated polynomial.
    """

    def __new__(cls, total, breakdown, notes=(), remainder_estimate=0.0):
        self = super().__new__(cls, (total, breakdown))
        self.notes = tuple(notes)
        self.remainder_estimate = float(remainder_estimate)
        return self

    @property
    def total(self):
        return self[0]

    @property
    def terms(self):
        return self[1]

    @property
    def per_class(self):
        return self[1]


def _require_simple(A, B):
    A = ShiftMultiset.of(A)
    B = ShiftMultiset.of(B)
    if A.has_repeats() or B.has_repeats():
        raise PoleError(
            "repeated shifts give higher-order poles; use "
            "recipe_moment_perturbed / recipe_poly_moment_perturbed")
    for a in A:
        for b in B:
            if a + b == 0:
                raise PoleError(
                    f"cross sum alpha+beta = 0 at alpha={a}, beta={b}; "
                    "perturb the shifts (see the perturbed wrappers)",
                    location=0.0)
    return A, B


def diagonal_series(A, B, X):
    """sum_{n<=X} tau_A(n) tau_B(n) / n from the shared divisor tables.

    Both the predicted and the empirical diagonal evaluate exactly this.
    """
    X = int(X)
    A = ShiftMultiset.of(A)
    B = ShiftMultiset.of(B)
    va = tau_table(A, X).values
    vb = va if B == A else tau_table(B, X).values
    n = np.arange(X + 1, dtype=float)
    n[0] = 1.0
    terms = va * vb / n
    return complex(terms[1:].sum())


def swap_terms(A, B, T, cfg=DEFAULT_EULER_CONFIG):
    """All SwapTerms of the full prediction, outermost swaps last."""
    A, B = _require_simple(A, B)
    out = []
    for k in range(min(len(A), len(B)) + 1):
        for U, arest in A.subsets(k):
            for V, brest in B.subsets(k):
                w = len(V) * sum(U) + len(U) * sum(V)
                na = arest.union(V.negate())
                nb = brest.union(U.negate())
                out.append(SwapTerm(U, V, b_pair(na, nb, cfg), -w))
    return out


def recipe_moment(A, B, T, cfg=DEFAULT_EULER_CONFIG):
    """The full swap-sum prediction at sample scale T."""
    if T <= 0:
        raise DomainError("recipe_moment needs T > 0")
    window = default_window()
    terms = swap_terms(A, B, T, cfg)
    total = 0.0 + 0.0j
    for term in terms:
        total += ((T / TWO_PI) ** term.exponent
                  * window.power_moment(term.exponent) * term.value)
    return RecipeResult(T * total, terms)


# ---- truncated polynomial: per-class contour residues ----


def _class_contribution(A, B, T, X, k, cfg, window, delta):
    """Sum over (U, V) with |U|=|V|=k of the residue expansion."""
    total = 0.0 + 0.0j
    remainder = 0.0
    ratio = TWO_PI ** k * X / T ** k
    for U, arest in A.subsets(k):
        for V, brest in B.subsets(k):
            w = k * (sum(U) + sum(V))
            # zeta factors of Z(A~(s), B~(s)): (const, slope) meaning
            # zeta(1 + const + slope*s)
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
            poles = [(0.0 + 0.0j, None)]
            for i, (c, slope) in enumerate(factors):
                if slope:
                    s0 = -complex(c) / slope   # argument 1+c+slope*s = 1
                    if -delta < s0.real < 2.0:
                        poles.append((s0, i))
            locs = [p for p, _ in poles]
            for i, p in enumerate(locs):
                for q in locs[i + 1:]:
                    if p == q:
                        raise PoleError(
                            "confluent contour poles; perturb the shifts",
                            location=p)
            for s0, isingular in poles:
                na = arest.shifted(s0).union(V.negate())
                nb = brest.union(U.negate().shifted(-s0))
                res = complex(arithmetic_factor(na, nb, cfg))
                for i, (c, slope) in enumerate(factors):
                    if i == isingular:
                        continue
                    res *= zeta(1.0 + c + slope * s0)
                if isingular is not None:
                    # zeta(1+c+slope*s) has residue 1/slope at s0, and the
                    # 1/s of the integrand contributes 1/s0
                    res *= 1.0 / (factors[isingular][1] * s0)
                total += ((T / TWO_PI) ** (-w) * ratio ** s0
                          * window.power_moment(-w - k * s0) * res)
            # crude left-contour scale: integrand's zeta part taken O(1)
            remainder += (abs((T / TWO_PI) ** (-w)) * ratio ** (-delta)
                          * 2.0 ** (k * delta)
                          * abs(window.power_moment(-w.real + k * delta)))
    return T * total, T * remainder


def recipe_poly_moment(A, B, T, X, cfg=DEFAULT_EULER_CONFIG, delta=0.25):
    """Truncated-polynomial prediction; classes with T^k >= X drop out."""
    A, B = _require_simple(A, B)
    if X <= 1:
        raise DomainError("recipe_poly_moment needs X > 1")
    if T <= 0:
        raise DomainError("recipe_poly_moment needs T > 0")
    window = default_window()
    per_class = {0: T * window.transform(0.0) * diagonal_series(A, B, X)}
    notes = []
    remainder = 0.0
    kmax = min(len(A), len(B))
    for k in range(1, kmax + 1):
        if T ** k >= X:
            notes.append(f"swap class {k} skipped: X <= T^{k}")
            continue
        if k > 2:
            notes.append(f"swap class {k} unsupported (no contour form)")
            continue
        value, rem = _class_contribution(A, B, T, X, k, cfg, window, delta)
        per_class[k] = value
        remainder += rem
    total = sum(per_class.values())
    return RecipeResult(total, per_class, notes, remainder)


# ---- confluent-shift wrappers ----


def _spread(shifts, eps, scale):
    """Displace the j-th sorted shift by eps*scale*(j+1); keeps repeats
    apart and, with different scales for A and B, cross sums nonzero."""
    shifts = ShiftMultiset.of(shifts)
    return ShiftMultiset.of([s + eps * scale * (j + 1)
                             for j, s in enumerate(shifts)])


_B_SCALE = math.sqrt(2.0)


def recipe_moment_perturbed(A, B, T, cfg=DEFAULT_EULER_CONFIG, eps=1e-4):
    """recipe_moment averaged over +/-eps displacements; the average is
    within O(eps^2) of the confluent limit."""
    up = recipe_moment(_spread(A, eps, 1.0), _spread(B, eps, _B_SCALE), T, cfg)
    dn = recipe_moment(_spread(A, -eps, 1.0), _spread(B, -eps, _B_SCALE), T, cfg)
    return 0.5 * (up.total + dn.total)


def recipe_poly_moment_perturbed(A, B, T, X, cfg=DEFAULT_EULER_CONFIG,
                                 eps=1e-4, delta=0.25):
    """recipe_poly_moment averaged over +/-eps displacements."""
    up = recipe_poly_moment(_spread(A, eps, 1.0), _spread(B, eps, _B_SCALE),
                            T, X, cfg, delta)
    dn = recipe_poly_moment(_spread(A, -eps, 1.0), _spread(B, -eps, _B_SCALE),
                            T, X, cfg, delta)
    return 0.5 * (up.total + dn.total)
