"""Sieve-built tables of generalized divisor values tau_A(n).

tau_A is multiplicative with tau_A(p^j) = h_j({p^{-alpha}}), so the table
is assembled from a smallest-prime-factor sieve: split n = (p^e) * core
with p the smallest prime of n, take tau at the leading prime power from a
small precomputed set, and multiply by the already-known value at core.

Tables persist to a binary cache: magic "MFTB", version, shift count,
bound, shifts as (re, im) float64 pairs, then the X complex values.  The
cache directory comes from the MOMENT_FORGE_CACHE environment variable
unless given explicitly.
"""

import hashlib
import math
import os
import struct
import tempfile

import numpy as np

from .. import _kernels
from ..errors import CapacityError, DomainError
from .ntheory import primes_up_to
from .shifts import ShiftMultiset

_MAGIC = b"MFTB"
_VERSION = 1
MAX_TABLE = 1 << 24
CACHE_ENV = "MOMENT_FORGE_CACHE"


class DivisorTable:
    """Immutable tau_A(n) values for 1 <= n <= bound."""

    def __init__(self, shifts, values, exact_values=None):
        self.shifts = ShiftMultiset.of(shifts)
        self.values = values
        self.values.flags.writeable = False
        self.bound = len(values) - 1
        self.exact_values = exact_values
        if exact_values is not None:
            self.exact_values.flags.writeable = False

    def value(self, n):
        """tau_A(n); raises CapacityError outside 1..bound."""
        if n < 1 or n > self.bound:
            raise CapacityError(f"n={n} outside table bound {self.bound}")
        return complex(self.values[n])

    def __repr__(self):
        return f"DivisorTable(shifts={self.shifts.shifts}, bound={self.bound})"


# ---- prime power values ----


def _prime_power_values(shifts, limit):
    """Array t with t[p^e] = tau_A(p^e) for all prime powers <= limit."""
    t = np.zeros(limit + 1, dtype=complex)
    t[1] = 1.0
    ps = primes_up_to(limit)
    if len(ps) == 0:
        return t
    vals1 = np.zeros(len(ps), dtype=complex)
    for a in shifts:
        vals1 += ps.astype(complex) ** (-complex(a))
    if len(shifts) == 0:
        vals1[:] = 0.0
    t[ps] = vals1
    # higher powers only exist for p <= sqrt(limit)
    for p in ps[ps * ps <= limit]:
        emax = int(math.log(limit) / math.log(p) + 1e-9)
        h = np.zeros(emax + 1, dtype=complex)
        h[0] = 1.0
        for a in shifts:
            x = p ** (-complex(a))
            for m in range(1, emax + 1):
                h[m] += x * h[m - 1]
        pe = p
        for e in range(1, emax + 1):
            if pe > limit:
                break
            t[pe] = h[e]
            pe *= p
    return t


def _assemble_exact(k, limit):
    """Integer d_k(n) table via the same leading-prime-power scheme."""
    spf = _kernels.spf_sieve(limit)
    core, lead = _kernels.split_leading(spf)
    t = np.zeros(limit + 1, dtype=np.int64)
    t[1] = 1
    ps = primes_up_to(limit) if k > 0 else primes_up_to(0)
    for p in ps:
        pe, e = p, 1
        while pe <= limit:
            t[pe] = math.comb(e + k - 1, k - 1)
            pe *= p
            e += 1
    tau_lead = t[lead]
    vals = tau_lead.copy()
    vals[0] = 0
    for _ in range(9):
        vals = tau_lead * vals[core]
        vals[1] = 1
    return vals


# ---- cache plumbing ----


def _cache_path(cache_dir, shifts, limit):
    payload = struct.pack("<II", _VERSION, len(shifts))
    payload += struct.pack("<Q", limit)
    for z in shifts:
        payload += struct.pack("<dd", z.real, z.imag)
    digest = hashlib.sha256(payload).hexdigest()[:24]
    return os.path.join(cache_dir, f"tau_{digest}.bin")


def _cache_write(path, shifts, values):
    limit = len(values) - 1
    header = _MAGIC + struct.pack("<II", _VERSION, len(shifts))
    header += struct.pack("<Q", limit)
    for z in shifts:
        header += struct.pack("<dd", z.real, z.imag)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path))
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(header)
            fh.write(np.ascontiguousarray(values[1:]).tobytes())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _cache_read(path, shifts, limit):
    try:
        with open(path, "rb") as fh:
            head = fh.read(4 + 8 + 8 + 16 * len(shifts))
            if len(head) < 4 or head[:4] != _MAGIC:
                return None
            version, count = struct.unpack_from("<II", head, 4)
            (bound,) = struct.unpack_from("<Q", head, 12)
            if version != _VERSION or count != len(shifts) or bound != limit:
                return None
            for i, z in enumerate(shifts):
                re, im = struct.unpack_from("<dd", head, 20 + 16 * i)
                if re != z.real or im != z.imag:
                    return None
            raw = fh.read(16 * limit)
            if len(raw) != 16 * limit:
                return None
            body = np.frombuffer(raw, dtype=np.complex128)
            values = np.zeros(limit + 1, dtype=complex)
            values[1:] = body
            return values
    except OSError:
        return None


# ---- the public constructor ----


def tau_table(A, X, *, exact=False, cache_dir=None, force_rebuild=False):
    """Build (or load) the DivisorTable for shift multiset A up to X.

    ``exact=True`` additionally computes integer values and is available
    only when every shift is zero (the classical d_k).
    """
    A = ShiftMultiset.of(A)
    X = int(X)
    if X < 1:
        raise CapacityError("tau_table needs X >= 1")
    if X > MAX_TABLE:
        raise CapacityError(f"table bound {X} exceeds the {MAX_TABLE} cap")
    if exact and any(z != 0 for z in A):
        raise DomainError("exact tables exist only for all-zero shifts")

    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV) or None
    path = None
    if cache_dir and not exact:
        os.makedirs(cache_dir, exist_ok=True)
        path = _cache_path(cache_dir, A.shifts, X)
        if not force_rebuild:
            values = _cache_read(path, A.shifts, X)
            if values is not None:
                return DivisorTable(A, values)

    spf = _kernels.spf_sieve(X)
    core, lead = _kernels.split_leading(spf)
    t = _prime_power_values(A.shifts, X)
    tau_lead = t[lead]
    values = np.asarray(_kernels.assemble_multiplicative(tau_lead, core))
    values = values.copy()
    if X >= 1:
        values[1] = 1.0
    values[0] = 0.0

    exact_values = _assemble_exact(len(A), X) if exact else None
    if path is not None:
        _cache_write(path, A.shifts, values)
    return DivisorTable(A, values, exact_values)
