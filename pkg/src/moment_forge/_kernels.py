"""Hot kernels in two interchangeable versions.

Each kernel exists as a numba @njit loop (suffix ``_numba``) and a pure
numpy implementation (suffix ``_numpy``).  The module-level names without a
suffix are bound to whichever family `_compat` selected, so callers never
branch.  The benchmark script imports both families explicitly.

Kernels:
  spf_sieve(limit)            smallest-prime-factor table
  split_leading(spf)          n = lead * core with lead = p^e || n, p = spf[n]
  assemble_multiplicative(tau_lead, core)
                              vals[n] = tau_lead[n] * vals[core[n]]
  sweep_pairs(...)            the windowed (m, n) double sum of the
                              Dirichlet-polynomial mean square
  spread_gaussian(...)        gridding step of the type-1 NUFFT
"""

import math

import numpy as np

from ._compat import HAS_NUMBA, njit

# ---- smallest prime factor ----


def _spf_sieve_impl(limit):
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        spf[1] = 1
    for p in range(2, int(math.sqrt(limit)) + 1):
        if spf[p] == 0:
            spf[p] = p
            for m in range(p * p, limit + 1, p):
                if spf[m] == 0:
                    spf[m] = p
    for n in range(2, limit + 1):
        if spf[n] == 0:
            spf[n] = n
    return spf


def _spf_sieve_numpy(limit):
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        spf[1] = 1
    for p in range(2, int(math.isqrt(limit)) + 1):
        if spf[p] == 0:
            spf[p] = p
            sl = spf[p * p::p]
            sl[sl == 0] = p
    rest = np.nonzero(spf == 0)[0]
    spf[rest] = rest
    spf[0] = 0
    return spf


# ---- leading prime power split ----


def _split_leading_impl(spf):
    limit = len(spf) - 1
    core = np.ones(limit + 1, dtype=np.int64)
    lead = np.ones(limit + 1, dtype=np.int64)
    lead[0] = 0
    for n in range(2, limit + 1):
        p = spf[n]
        m = n // p
        while m % p == 0:
            m //= p
        core[n] = m
        lead[n] = n // m
    return core, lead


def _split_leading_numpy(spf):
    limit = len(spf) - 1
    n_arr = np.arange(limit + 1, dtype=np.int64)
    core = n_arr.copy()
    core[0] = 1
    safe = np.where(spf >= 2, spf, 2)
    # exponents are < 24 for any table that fits in memory
    for _ in range(24):
        mask = (spf >= 2) & (core % safe == 0)
        if not mask.any():
            break
        core[mask] //= safe[mask]
    lead = n_arr // core
    lead[0] = 0
    lead[1] = 1
    return core, lead


# ---- multiplicative assembly ----


def _assemble_impl(tau_lead, core):
    limit = len(core) - 1
    vals = np.zeros(limit + 1, dtype=np.complex128)
    if limit >= 1:
        vals[1] = tau_lead[1]
    for n in range(2, limit + 1):
        vals[n] = tau_lead[n] * vals[core[n]]
    return vals


def _assemble_numpy(tau_lead, core):
    vals = tau_lead.copy()
    if len(vals) > 0:
        vals[0] = 0.0
    # vals[n] is correct once the pass count reaches the number of distinct
    # primes of n; 9 passes cover every n below 2*3*5*7*11*13*17*19*23
    for _ in range(9):
        vals = tau_lead * vals[core]
        if len(vals) > 1:
            vals[1] = tau_lead[1]
    return vals


# ---- windowed pair sweep ----
# Sum over 1 <= m, n <= X with |v| <= W of wa[m] * wb[n] * psi_hat(v),
# v = (T / 2 pi) (logn[m] - logn[n]); wa, wb already carry the 1/sqrt
# factors.  psi_hat is read from the cached grid by inline cubic
# interpolation.  The shared logn table (not per-kernel math.log calls)
# makes pair membership bit-identical across kernel families and the
# naive reference loop.


def _sweep_pairs_impl(wa, wb, logn, big_t, big_w, grid_re, grid_im, step):
    big_x = len(wa) - 1
    c = big_t / (2.0 * math.pi)
    rm = math.exp(-2.0 * math.pi * big_w / big_t)
    rp = math.exp(2.0 * math.pi * big_w / big_t)
    ngrid = len(grid_re)
    acc = 0.0 + 0.0j
    pairs = 0
    for m in range(1, big_x + 1):
        # superset range; the per-pair |v| <= W check decides membership
        lo = int(m * rm) - 2
        if lo < 1:
            lo = 1
        hi = int(m * rp) + 2
        if hi > big_x:
            hi = big_x
        lm = logn[m]
        inner = 0.0 + 0.0j
        for n in range(lo, hi + 1):
            v = c * (lm - logn[n])
            av = abs(v)
            if av > big_w:
                continue
            u = av / step
            base = int(u) - 1
            if base < 0:
                base = 0
            elif base > ngrid - 4:
                base = ngrid - 4
            d = u - base
            w0 = -(d - 1.0) * (d - 2.0) * (d - 3.0) / 6.0
            w1 = d * (d - 2.0) * (d - 3.0) / 2.0
            w2 = -d * (d - 1.0) * (d - 3.0) / 2.0
            w3 = d * (d - 1.0) * (d - 2.0) / 6.0
            hre = (w0 * grid_re[base] + w1 * grid_re[base + 1]
                   + w2 * grid_re[base + 2] + w3 * grid_re[base + 3])
            him = (w0 * grid_im[base] + w1 * grid_im[base + 1]
                   + w2 * grid_im[base + 2] + w3 * grid_im[base + 3])
            if v < 0.0:
                him = -him
            inner += wb[n] * complex(hre, him)
            pairs += 1
        acc += wa[m] * inner
    return acc, pairs


def _sweep_pairs_numpy(wa, wb, logn, big_t, big_w, grid_re, grid_im, step):
    big_x = len(wa) - 1
    c = big_t / (2.0 * math.pi)
    rm = math.exp(-2.0 * math.pi * big_w / big_t)
    rp = math.exp(2.0 * math.pi * big_w / big_t)
    grid = grid_re + 1j * grid_im
    ngrid = len(grid)
    acc = 0.0 + 0.0j
    pairs = 0
    for m in range(1, big_x + 1):
        lo = max(1, int(m * rm) - 2)
        hi = min(big_x, int(m * rp) + 2)
        if hi < lo:
            continue
        v = c * (logn[m] - logn[lo:hi + 1])
        keep = np.abs(v) <= big_w
        v = v[keep]
        u = np.abs(v) / step
        base = np.clip(u.astype(np.int64) - 1, 0, ngrid - 4)
        d = u - base
        w0 = -(d - 1.0) * (d - 2.0) * (d - 3.0) / 6.0
        w1 = d * (d - 2.0) * (d - 3.0) / 2.0
        w2 = -d * (d - 1.0) * (d - 3.0) / 2.0
        w3 = d * (d - 1.0) * (d - 2.0) / 6.0
        ph = (w0 * grid[base] + w1 * grid[base + 1]
              + w2 * grid[base + 2] + w3 * grid[base + 3])
        ph = np.where(v < 0.0, np.conjugate(ph), ph)
        acc += wa[m] * np.sum(wb[lo:hi + 1][keep] * ph)
        pairs += int(keep.sum())
    return acc, pairs


# ---- gaussian gridding for the type-1 NUFFT ----


def _spread_gaussian_impl(x, c, big_mr, msp, tau):
    h = 2.0 * math.pi / big_mr
    ftau = np.zeros(big_mr, dtype=np.complex128)
    for j in range(len(x)):
        xj = x[j] % (2.0 * math.pi)
        near = int(math.floor(xj / h + 0.5))
        cj = c[j]
        for l in range(-msp, msp + 1):
            idx = (near + l) % big_mr
            d = xj - (near + l) * h
            ftau[idx] += cj * math.exp(-d * d / (4.0 * tau))
    return ftau


def _spread_gaussian_numpy(x, c, big_mr, msp, tau):
    h = 2.0 * math.pi / big_mr
    xm = np.mod(x, 2.0 * math.pi)
    near = np.rint(xm / h).astype(np.int64)
    ftau = np.zeros(big_mr, dtype=np.complex128)
    for l in range(-msp, msp + 1):
        idx = np.mod(near + l, big_mr)
        d = xm - (near + l) * h
        np.add.at(ftau, idx, c * np.exp(-d * d / (4.0 * tau)))
    return ftau


# ---- selection ----

if HAS_NUMBA:
    _spf_sieve_numba = njit(cache=True)(_spf_sieve_impl)
    _split_leading_numba = njit(cache=True)(_split_leading_impl)
    _assemble_numba = njit(cache=True)(_assemble_impl)
    _sweep_pairs_numba = njit(cache=True)(_sweep_pairs_impl)
    _spread_gaussian_numba = njit(cache=True)(_spread_gaussian_impl)

    spf_sieve = _spf_sieve_numba
    split_leading = _split_leading_numba
    assemble_multiplicative = _assemble_numba
    sweep_pairs = _sweep_pairs_numba
    spread_gaussian = _spread_gaussian_numba
else:
    spf_sieve = _spf_sieve_numpy
    split_leading = _split_leading_numpy
    assemble_multiplicative = _assemble_numpy
    sweep_pairs = _sweep_pairs_numpy
    spread_gaussian = _spread_gaussian_numpy
