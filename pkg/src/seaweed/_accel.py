"""Numba switch.

Set ``SEAWEED_NUMBA=0`` in the environment to run every kernel through its
pure numpy/Python fallback. The flag is read once at import time.
"""

from __future__ import annotations

import os

_FLAG = os.environ.get("SEAWEED_NUMBA", "1").strip().lower()
USE_NUMBA = _FLAG not in ("0", "false", "no", "off")

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    USE_NUMBA = False


def njit(fn):
    """``numba.njit(cache=True)`` when acceleration is on, identity otherwise."""
    if USE_NUMBA:
        return numba.njit(cache=True)(fn)
    return fn


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
