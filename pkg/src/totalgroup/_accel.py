"""Kernel compilation switch.

Kernels are written once as plain Python over numpy arrays and compiled with
numba's ``njit`` unless ``TOTALGROUP_NO_NUMBA=1`` (or numba is missing), in
which case the interpreted source runs unchanged.
"""

from __future__ import annotations

import os

_DISABLED = os.environ.get("TOTALGROUP_NO_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:
    _njit = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _DISABLED


def kernel(fn):
    """Return ``fn`` compiled when numba is active; keep the source as ``fn.py_func``."""
    if not USE_NUMBA:
        fn.py_func = fn
        return fn
    compiled = _njit(cache=True, nogil=True)(fn)
    return compiled


def backend() -> str:
    return "numba" if USE_NUMBA else "python"
