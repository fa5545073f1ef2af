"""Timing comparison of the numba kernels against the numpy fallbacks.

Each kernel path is measured in its own subprocess because the selection
happens at import time (MOMENT_FORGE_NO_NUMBA).  Run from the repository
root:

    python3 benchmarks/bench_kernels.py
"""

import json
import os
import subprocess
import sys
import time

WORKLOADS = ("sieve", "sweep", "spread", "mean_square")


def _measure():
    import numpy as np

    from moment_forge import _kernels
    from moment_forge._compat import HAS_NUMBA
    from moment_forge.arith import ShiftMultiset, default_window, tau_table
    from moment_forge.empirical import (MomentSpec, dirichlet_mean_square,
                                        log_table)

    out = {"numba": HAS_NUMBA, "timings": {}}

    def clock(name, fn, repeats=3):
        fn()   # warm up (first numba call compiles)
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn()
            times.append(time.perf_counter() - t0)
        out["timings"][name] = min(times)

    X = 2_000_000
    clock("sieve", lambda: _kernels.spf_sieve(X))

    A = ShiftMultiset([0.01])
    B = ShiftMultiset([0.02])
    T = 1500.0
    spec = MomentSpec(A, B, T, 30_000)
    wa = tau_table(A, 30_000).values[: 30_001] \
        / np.sqrt(np.maximum(np.arange(30_001), 1))
    wb = tau_table(B, 30_000).values[: 30_001] \
        / np.sqrt(np.maximum(np.arange(30_001), 1))
    logn = log_table(30_000)
    w = default_window()
    clock("sweep", lambda: _kernels.sweep_pairs(
        wa.astype(complex), wb.astype(complex), logn, T, spec.W,
        w.grid_re, w.grid_im, w.grid_step))

    rng = np.random.default_rng(3)
    x = rng.uniform(0.0, 2.0 * np.pi, 200_000)
    c = rng.normal(size=200_000) + 1j * rng.normal(size=200_000)
    clock("spread", lambda: _kernels.spread_gaussian(x, c, 1 << 17, 12,
                                                     1e-4))

    big = MomentSpec(A, B, 2000.0, 40_000)
    clock("mean_square",
          lambda: dirichlet_mean_square(big, strategy="sweep"))

    json.dump(out, sys.stdout)


def main():
    rows = {}
    for label, env_val in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, MOMENT_FORGE_NO_NUMBA=env_val)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--worker"],
            env=env, capture_output=True, text=True, check=True)
        rows[label] = json.loads(proc.stdout)
    print(f"{'kernel':<14} {'numba':>10} {'numpy':>10} {'speedup':>9}")
    for name in rows["numba"]["timings"]:
        tn = rows["numba"]["timings"][name]
        tp = rows["numpy"]["timings"][name]
        print(f"{name:<14} {tn:>9.4f}s {tp:>9.4f}s {tp / tn:>8.2f}x")
    if not rows["numba"]["numba"]:
        print("note: numba was not importable; both columns ran the "
              "numpy fallback")


if __name__ == "__main__":
    if "--worker" in sys.argv:
        _measure()
    else:
        main()
