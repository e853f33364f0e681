"""Compiled inner loops for periodic-point detection.

Every kernel takes ``pw``, the precomputed table ``x**n mod p``; the map for
parameter c is then ``x -> (pw[x] + c) mod p``.
"""

import numba
import numpy as np

# The bundled TBB is often too old for numba; prefer layers that always load.
numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

_UNVISITED = 0
_ON_PATH = 1
_RESOLVED = 2


@numba.njit(cache=True, nogil=True)
def _mark_periodic(pw, c, out, state, path):
    # Three-colour walk of the functional graph; out[x] = x is periodic.
    p = pw.shape[0]
    state[:] = _UNVISITED
    out[:] = False
    for s in range(p):
        if state[s] != _UNVISITED:
            continue
        length = 0
        x = s
        while state[x] == _UNVISITED:
            state[x] = _ON_PATH
            path[length] = x
            length += 1
            x = pw[x] + c
            if x >= p:
                x -= p
        if state[x] == _ON_PATH:
            # The walk closed on itself: x starts the cycle.
            y = x
            while True:
                out[y] = True
                y = pw[y] + c
                if y >= p:
                    y -= p
                if y == x:
                    break
        for k in range(length):
            state[path[k]] = _RESOLVED


@numba.njit(cache=True)
def periodic_mask(pw, c):
    p = pw.shape[0]
    out = np.zeros(p, dtype=np.bool_)
    state = np.empty(p, dtype=np.int8)
    path = np.empty(p, dtype=np.int64)
    _mark_periodic(pw, c, out, state, path)
    return out


@numba.njit(cache=True, parallel=True)
def ppd_block(pw, c_start, c_stop):
    """Rows c_start..c_stop-1 of the grid, one row per parameter c."""
    p = pw.shape[0]
    k = c_stop - c_start
    out = np.zeros((k, p), dtype=np.bool_)
    for r in numba.prange(k):
        state = np.empty(p, dtype=np.int8)
        path = np.empty(p, dtype=np.int64)
        _mark_periodic(pw, c_start + r, out[r], state, path)
    return out


@numba.njit(cache=True, parallel=True)
def column_counts(pw):
    """Number of periodic points for every c, without storing the grid."""
    p = pw.shape[0]
    counts = np.zeros(p, dtype=np.int64)
    for c in numba.prange(p):
        mask = np.empty(p, dtype=np.bool_)
        state = np.empty(p, dtype=np.int8)
        path = np.empty(p, dtype=np.int64)
        _mark_periodic(pw, c, mask, state, path)
        counts[c] = mask.sum()
    return counts
