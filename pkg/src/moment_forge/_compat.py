"""Numba detection and the kernel-selection switch.

Hot kernels ship in two versions: a numba @njit loop version and a pure
numpy fallback.  The fallback is selected automatically when numba is not
importable, or forced by setting the environment variable
MOMENT_FORGE_NO_NUMBA to anything other than "" or "0" before import.
"""

import os

NO_NUMBA_ENV = "MOMENT_FORGE_NO_NUMBA"


def numba_disabled_by_env():
    return os.environ.get(NO_NUMBA_ENV, "") not in ("", "0")


try:
    if numba_disabled_by_env():
        raise ImportError("numba disabled via " + NO_NUMBA_ENV)
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    njit = None
    HAS_NUMBA = False
