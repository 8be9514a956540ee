"""Compiled distance kernels: two-row dynamic programs with cutoff pruning.

Each kernel keeps at most two rows of the cost matrix alive and maintains the
band of columns whose cumulative cost is still within the cutoff. Step costs
are nonnegative, so a cell above the cutoff can never lie on a path whose
total stays within it; such cells are set to +inf and the band shrinks. When
the band empties the kernel returns +inf immediately. With ``cutoff = inf``
the full matrix is evaluated and the result is exact.

The per-cell arithmetic (operand order included) matches the full-matrix
recurrences in ``reference`` exactly, so both routes return bit-equal values.
No fastmath: IEEE semantics are load-bearing here.
"""

from __future__ import annotations

import numpy as np
from numba import njit

__all__ = ["sqed_ea", "dtw_ea", "cdtw_ea", "wdtw_ea", "adtw_ea"]


@njit(cache=True)
def sqed_ea(s, t, cutoff):
    acc = 0.0
    for i in range(s.shape[0]):
        d = s[i] - t[i]
        acc = acc + d * d
        if acc > cutoff:
            return np.inf
    return acc


@njit(cache=True)
def dtw_ea(s, t, cutoff):
    m = s.shape[0]
    n = t.shape[0]
    prev = np.full(n + 1, np.inf)
    cur = np.full(n + 1, np.inf)
    prev[0] = 0.0
    lo = 0
    hi = 0
    for i in range(1, m + 1):
        cur[:] = np.inf
        si = s[i - 1]
        nlo = -1
        nhi = -1
        j = lo if lo > 1 else 1
        while j <= n:
            # Beyond hi + 1 only horizontal extension can stay live.
            if j > hi + 1 and cur[j - 1] == np.inf:
                break
            d = si - t[j - 1]
            c = d * d
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if cur[j - 1] < best:
                best = cur[j - 1]
            v = c + best
            if v <= cutoff:
                cur[j] = v
                if nlo < 0:
                    nlo = j
                nhi = j
            j += 1
        if nlo < 0:
            return np.inf
        lo = nlo
        hi = nhi
        tmp = prev
        prev = cur
        cur = tmp
    v = prev[n]
    if v <= cutoff:
        return v
    return np.inf


@njit(cache=True)
def cdtw_ea(s, t, window, cutoff):
    m = s.shape[0]
    n = t.shape[0]
    prev = np.full(n + 1, np.inf)
    cur = np.full(n + 1, np.inf)
    prev[0] = 0.0
    lo = 0
    hi = 0
    for i in range(1, m + 1):
        cur[:] = np.inf
        si = s[i - 1]
        nlo = -1
        nhi = -1
        j = i - window
        if j < 1:
            j = 1
        if j < lo:
            j = lo
        jband = i + window
        if jband > n:
            jband = n
        while j <= jband:
            if j > hi + 1 and cur[j - 1] == np.inf:
                break
            d = si - t[j - 1]
            c = d * d
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if cur[j - 1] < best:
                best = cur[j - 1]
            v = c + best
            if v <= cutoff:
                cur[j] = v
                if nlo < 0:
                    nlo = j
                nhi = j
            j += 1
        if nlo < 0:
            return np.inf
        lo = nlo
        hi = nhi
        tmp = prev
        prev = cur
        cur = tmp
    v = prev[n]
    if v <= cutoff:
        return v
    return np.inf


@njit(cache=True)
def wdtw_ea(s, t, weights, cutoff):
    m = s.shape[0]
    n = t.shape[0]
    prev = np.full(n + 1, np.inf)
    cur = np.full(n + 1, np.inf)
    prev[0] = 0.0
    lo = 0
    hi = 0
    for i in range(1, m + 1):
        cur[:] = np.inf
        si = s[i - 1]
        nlo = -1
        nhi = -1
        j = lo if lo > 1 else 1
        while j <= n:
            if j > hi + 1 and cur[j - 1] == np.inf:
                break
            d = si - t[j - 1]
            c = d * d * weights[abs(i - j)]
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if cur[j - 1] < best:
                best = cur[j - 1]
            v = c + best
            if v <= cutoff:
                cur[j] = v
                if nlo < 0:
                    nlo = j
                nhi = j
            j += 1
        if nlo < 0:
            return np.inf
        lo = nlo
        hi = nhi
        tmp = prev
        prev = cur
        cur = tmp
    v = prev[n]
    if v <= cutoff:
        return v
    return np.inf


@njit(cache=True)
def adtw_ea(s, t, penalty, cutoff):
    m = s.shape[0]
    n = t.shape[0]
    prev = np.full(n + 1, np.inf)
    cur = np.full(n + 1, np.inf)
    prev[0] = 0.0
    lo = 0
    hi = 0
    for i in range(1, m + 1):
        cur[:] = np.inf
        si = s[i - 1]
        nlo = -1
        nhi = -1
        j = lo if lo > 1 else 1
        while j <= n:
            if j > hi + 1 and cur[j - 1] == np.inf:
                break
            d = si - t[j - 1]
            c = d * d
            v = prev[j - 1] + c
            v2 = prev[j] + c + penalty
            if v2 < v:
                v = v2
            v3 = cur[j - 1] + c + penalty
            if v3 < v:
                v = v3
            if v <= cutoff:
                cur[j] = v
                if nlo < 0:
                    nlo = j
                nhi = j
            j += 1
        if nlo < 0:
            return np.inf
        lo = nlo
        hi = nhi
        tmp = prev
        prev = cur
        cur = tmp
    v = prev[n]
    if v <= cutoff:
        return v
    return np.inf
