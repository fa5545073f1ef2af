"""Dirichlet-polynomial mean squares, computed directly.

    I(T; X) = T * sum_{m,n <= X} tau_A(m) tau_B(n)
              * psi_hat((T/2pi) log(m/n)) / sqrt(mn)

Three strategies share one definition of the pair weight:

* ``sweep``: for each m, n runs over [m e^{-2piW/T}, m e^{2piW/T}] and each
  pair is tested against |v| <= W; psi_hat comes from the cached grid.
* ``spectral``: psi_hat is opened up as int psi(t) (m/n)^{itT} dt and the
  t-integral is discretized, turning the pair sum into a product of two
  nonuniform Fourier sums evaluated by a type-1 NUFFT.  No pair cutoff.
* ``naive``: the O(X^2) double loop, kept as the correctness reference;
  with ``cutoff`` set it makes bit-identical membership decisions to the
  sweep (same log table, same interpolation arithmetic).

``auto`` picks sweep when the predicted pair count fits the budget and
spectral otherwise; an explicit sweep request over budget raises
BudgetError instead.
"""

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .. import _kernels
from ..arith.shifts import ShiftMultiset
from ..arith.sieve import tau_table
from ..arith.window import Window, default_window
from ..errors import BudgetError, DomainError
from ..recipe.swaps import diagonal_series

TWO_PI = 2.0 * math.pi
DEFAULT_PAIR_BUDGET = 200_000_000


@dataclass(frozen=True)
class MomentSpec:
    """One mean-square instance: shift sets, scale T, length X, window."""

    A: ShiftMultiset
    B: ShiftMultiset
    T: float
    X: float
    window: Window = None
    W: float = None

    def __post_init__(self):
        object.__setattr__(self, "A", ShiftMultiset.of(self.A))
        object.__setattr__(self, "B", ShiftMultiset.of(self.B))
        if self.T < 100:
            raise DomainError("MomentSpec needs T >= 100")
        if self.X < 2:
            raise DomainError("MomentSpec needs X >= 2")
        if self.window is None:
            object.__setattr__(self, "window", default_window())
        if self.W is None:
            object.__setattr__(self, "W", self.window.support_radius(1e-10))


class MeanSquareValue(complex):
    """The computed moment, carrying how it was computed."""

    def __new__(cls, value, pairs_visited=0, strategy="", wall_time=0.0):
        self = super().__new__(cls, value)
        self.pairs_visited = int(pairs_visited)
        self.strategy = str(strategy)
        self.wall_time = float(wall_time)
        return self


def log_table(X):
    """log n for n = 0..X with the 0 slot pinned; shared by every path so
    pair membership decisions are bit-identical."""
    n = np.arange(int(X) + 1, dtype=float)
    n[0] = 1.0
    return np.log(n)


def _weights(S, X):
    """tau_S(n) / sqrt(n) for n = 0..X."""
    vals = tau_table(S, int(X)).values.copy()
    n = np.arange(int(X) + 1, dtype=float)
    n[0] = 1.0
    return vals / np.sqrt(n)


def pair_estimate(X, T, W):
    """Exact count of pairs the sweep will enumerate (superset ranges)."""
    X = int(X)
    rm = math.exp(-TWO_PI * W / T)
    rp = math.exp(TWO_PI * W / T)
    m = np.arange(1, X + 1, dtype=float)
    lo = np.maximum(1, (m * rm).astype(np.int64) - 2)
    hi = np.minimum(X, (m * rp).astype(np.int64) + 2)
    return int(np.maximum(hi - lo + 1, 0).sum())


# ---- spectral path ----


def _nufft_positive_modes(x, c, nj):
    """f[j] = sum_k c_k e^{i j x_k} for j = 0..nj-1 via Gaussian gridding.

    The caller pre-multiplies c by e^{i (nj//2) x} so the NUFFT's centered
    mode window [-nj/2, nj/2) lands on 0..nj-1.
    """
    mr = 2 * nj
    msp = 12
    tau = math.sqrt(2.0) * math.pi * msp / (mr * mr)
    ftau = _kernels.spread_gaussian(x, c, mr, msp, tau)
    fk = np.fft.fftshift(mr * np.fft.ifft(ftau))
    sel = fk[mr // 2 - nj // 2: mr // 2 + nj // 2]
    ks = np.arange(-(nj // 2), nj - nj // 2, dtype=float)
    h = TWO_PI / mr
    return sel * (h / (2.0 * math.sqrt(math.pi * tau))) * np.exp(tau * ks * ks)


def _spectral(spec):
    """T * dt * sum_j psi(t_j) P(t_j) Q(t_j) with P, Q by type-1 NUFFT.

    The t-grid t_j = 1 + j/nt oversamples the largest phase frequency
    T log X by 1.35; psi vanishing at both ends makes the equispaced sum
    spectrally accurate.
    """
    X = int(spec.X)
    T = float(spec.T)
    logx = math.log(max(X, 2))
    nt = int(1.35 * T * logx / math.pi) + 64
    nj = nt + (nt % 2) + 2
    dt = 1.0 / nt
    lm = log_table(X)
    x = (T * dt) * lm
    off = nj // 2
    phase = np.exp(1j * (T * lm + off * x))
    wa = _weights(spec.A, X)
    wb = _weights(spec.B, X)
    pa = _nufft_positive_modes(x, wa * phase, nj)[: nt + 1]
    qb = np.conjugate(_nufft_positive_modes(x, np.conjugate(wb) * phase,
                                            nj)[: nt + 1])
    t = 1.0 + dt * np.arange(nt + 1)
    psi = spec.window.eval(t)
    return T * dt * complex(np.sum(psi * pa * qb))


# ---- direct paths ----


def _sweep(spec, budget, enforce_budget):
    est = pair_estimate(spec.X, spec.T, spec.W)
    if est > budget:
        if enforce_budget:
            raise BudgetError(
                f"sweep would enumerate ~{est:.2e} pairs, over the budget "
                f"{budget:.2e}", suggestion="lower X or raise T, or use "
                "strategy='spectral'")
        return None
    wa = _weights(spec.A, spec.X)
    wb = _weights(spec.B, spec.X)
    acc, pairs = _kernels.sweep_pairs(
        wa, wb, log_table(spec.X), float(spec.T), float(spec.W),
        spec.window.grid_re, spec.window.grid_im, spec.window.grid_step)
    return spec.T * acc, pairs


def dirichlet_mean_square(spec, strategy="auto", budget=DEFAULT_PAIR_BUDGET,
                          diagonal_only=False):
    """I(T; X) for the given spec; see the module docstring for strategies."""
    t0 = time.perf_counter()
    if diagonal_only:
        value = (spec.T * spec.window.transform(0.0)
                 * diagonal_series(spec.A, spec.B, int(spec.X)))
        return MeanSquareValue(value, int(spec.X), "diagonal",
                               time.perf_counter() - t0)
    if strategy not in ("auto", "sweep", "spectral"):
        raise DomainError(f"unknown strategy {strategy!r}")
    if strategy in ("auto", "sweep"):
        got = _sweep(spec, budget, enforce_budget=(strategy == "sweep"))
        if got is not None:
            value, pairs = got
            return MeanSquareValue(value, pairs, "sweep",
                                   time.perf_counter() - t0)
    value = _spectral(spec)
    return MeanSquareValue(value, 0, "spectral", time.perf_counter() - t0)


def naive_mean_square(spec, apply_cutoff=True):
    """The O(X^2) reference double loop.

    With ``apply_cutoff`` the |v| <= W test and grid interpolation repeat
    the sweep kernel's arithmetic exactly; without it every pair is summed
    through the full transform (interpolated or direct quadrature), which
    is the plain truncated sum with no window cutoff at all.
    """
    X = int(spec.X)
    T = float(spec.T)
    wa = _weights(spec.A, X)
    wb = _weights(spec.B, X)
    logn = log_table(X)
    c = T / TWO_PI
    window = spec.window
    acc = 0.0 + 0.0j
    pairs = 0
    for m in range(1, X + 1):
        v = c * (logn[m] - logn[1:])
        if apply_cutoff:
            keep = np.abs(v) <= spec.W
            ph = window._interp(v[keep])
            acc += wa[m] * np.sum(wb[1:][keep] * ph)
            pairs += int(keep.sum())
        else:
            acc += wa[m] * np.sum(wb[1:] * window.transform(v))
            pairs += X
    return MeanSquareValue(T * acc, pairs, "naive",
                           0.0)
