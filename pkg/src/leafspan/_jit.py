"""Numba switch for the search kernels.

Set ``LEAFSPAN_DISABLE_NUMBA=1`` to run every kernel as plain Python.  The
flag is read once, at import time.
"""

import os

import numpy as np

_FLAG = os.environ.get("LEAFSPAN_DISABLE_NUMBA", "").strip().lower()

USE_NUMBA = _FLAG not in ("1", "true", "yes", "on")

if USE_NUMBA:
    try:
        import numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False

if USE_NUMBA:

    def kernel(fn):
        return numba.njit(cache=True)(fn)

    @numba.njit(cache=True)
    def buf(size):
        return np.zeros(size, np.int64)

    def to_kernel_adj(adj):
        return np.array(adj, dtype=np.uint64).view(np.int64)

else:

    def kernel(fn):
        return fn

    def buf(size):
        return [0] * size

    def to_kernel_adj(adj):
        return list(adj)


def backend():
    return "numba" if USE_NUMBA else "python"
