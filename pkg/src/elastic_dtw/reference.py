"""Full-matrix recurrences and path backtracking.

These plain-loop implementations materialize the complete (m+1) x (n+1)
matrix with its +inf borders. They back ``cost_matrix`` and ``warping_path``
and act as the auditable counterpart of the pruned kernels in ``_kernels``;
the per-cell expressions are kept identical operand for operand so that both
routes produce bit-equal values.

Backtracking recomputes each candidate predecessor expression and follows the
first one that reproduces the stored cell value, preferring the diagonal,
then the left (j - 1), then the top (i - 1) predecessor.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "sqed_value",
    "sqed_matrix",
    "dtw_matrix",
    "cdtw_matrix",
    "wdtw_matrix",
    "adtw_matrix",
    "sqed_path",
    "dtw_path",
    "cdtw_path",
    "wdtw_path",
    "adtw_path",
]


def sqed_value(s, t) -> float:
    acc = 0.0
    for i in range(s.shape[0]):
        d = s[i] - t[i]
        acc = acc + d * d
    return float(acc)


def sqed_matrix(s, t) -> np.ndarray:
    # Diagonal prefix sums; everything off the diagonal is unreachable.
    m = s.shape[0]
    mat = np.full((m + 1, m + 1), np.inf)
    mat[0, 0] = 0.0
    acc = 0.0
    for i in range(1, m + 1):
        d = s[i - 1] - t[i - 1]
        acc = acc + d * d
        mat[i, i] = acc
    return mat


def dtw_matrix(s, t) -> np.ndarray:
    m = s.shape[0]
    n = t.shape[0]
    mat = np.full((m + 1, n + 1), np.inf)
    mat[0, 0] = 0.0
    for i in range(1, m + 1):
        si = s[i - 1]
        for j in range(1, n + 1):
            d = si - t[j - 1]
            c = d * d
            mat[i, j] = c + min(mat[i - 1, j - 1], mat[i - 1, j], mat[i, j - 1])
    return mat


def cdtw_matrix(s, t, window: int) -> np.ndarray:
    m = s.shape[0]
    n = t.shape[0]
    mat = np.full((m + 1, n + 1), np.inf)
    mat[0, 0] = 0.0
    for i in range(1, m + 1):
        si = s[i - 1]
        jlo = max(1, i - window)
        jhi = min(n, i + window)
        for j in range(jlo, jhi + 1):
            d = si - t[j - 1]
            c = d * d
            mat[i, j] = c + min(mat[i - 1, j - 1], mat[i - 1, j], mat[i, j - 1])
    return mat


def wdtw_matrix(s, t, weights) -> np.ndarray:
    m = s.shape[0]
    n = t.shape[0]
    mat = np.full((m + 1, n + 1), np.inf)
    mat[0, 0] = 0.0
    for i in range(1, m + 1):
        si = s[i - 1]
        for j in range(1, n + 1):
            d = si - t[j - 1]
            c = d * d * weights[abs(i - j)]
            mat[i, j] = c + min(mat[i - 1, j - 1], mat[i - 1, j], mat[i, j - 1])
    return mat


def adtw_matrix(s, t, penalty: float) -> np.ndarray:
    m = s.shape[0]
    n = t.shape[0]
    mat = np.full((m + 1, n + 1), np.inf)
    mat[0, 0] = 0.0
    for i in range(1, m + 1):
        si = s[i - 1]
        for j in range(1, n + 1):
            d = si - t[j - 1]
            c = d * d
            mat[i, j] = min(
                mat[i - 1, j - 1] + c,
                mat[i - 1, j] + c + penalty,
                mat[i, j - 1] + c + penalty,
            )
    return mat


def _walk(mat, candidates) -> list[tuple[int, int]]:
    i = mat.shape[0] - 1
    j = mat.shape[1] - 1
    steps = [(i, j)]
    while (i, j) != (1, 1):
        here = mat[i, j]
        moved = False
        for pi, pj, expected in candidates(i, j):
            if expected == here:
                i, j = pi, pj
                steps.append((i, j))
                moved = True
                break
        if not moved:  # pragma: no cover - matrices built above always backtrack
            raise RuntimeError(f"no predecessor reproduces cell ({i}, {j})")
    steps.reverse()
    return steps


def sqed_path(s, t) -> tuple[list[tuple[int, int]], np.ndarray]:
    mat = sqed_matrix(s, t)
    steps = [(k, k) for k in range(1, s.shape[0] + 1)]
    return steps, mat


def dtw_path(s, t) -> tuple[list[tuple[int, int]], np.ndarray]:
    mat = dtw_matrix(s, t)

    def candidates(i, j):
        d = s[i - 1] - t[j - 1]
        c = d * d
        yield i - 1, j - 1, c + mat[i - 1, j - 1]
        yield i, j - 1, c + mat[i, j - 1]
        yield i - 1, j, c + mat[i - 1, j]

    return _walk(mat, candidates), mat


def cdtw_path(s, t, window: int) -> tuple[list[tuple[int, int]], np.ndarray]:
    mat = cdtw_matrix(s, t, window)

    def candidates(i, j):
        d = s[i - 1] - t[j - 1]
        c = d * d
        yield i - 1, j - 1, c + mat[i - 1, j - 1]
        yield i, j - 1, c + mat[i, j - 1]
        yield i - 1, j, c + mat[i - 1, j]

    return _walk(mat, candidates), mat


def wdtw_path(s, t, weights) -> tuple[list[tuple[int, int]], np.ndarray]:
    mat = wdtw_matrix(s, t, weights)

    def candidates(i, j):
        d = s[i - 1] - t[j - 1]
        c = d * d * weights[abs(i - j)]
        yield i - 1, j - 1, c + mat[i - 1, j - 1]
        yield i, j - 1, c + mat[i, j - 1]
        yield i - 1, j, c + mat[i - 1, j]

    return _walk(mat, candidates), mat


def adtw_path(s, t, penalty: float) -> tuple[list[tuple[int, int]], np.ndarray]:
    mat = adtw_matrix(s, t, penalty)

    def candidates(i, j):
        d = s[i - 1] - t[j - 1]
        c = d * d
        yield i - 1, j - 1, mat[i - 1, j - 1] + c
        yield i, j - 1, mat[i, j - 1] + c + penalty
        yield i - 1, j, mat[i - 1, j] + c + penalty

    return _walk(mat, candidates), mat
