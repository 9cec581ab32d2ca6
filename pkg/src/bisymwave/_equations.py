"""Residual evaluation for the 6x6 filter condition system.

All functions operate on raw arrays so that both the public verifier and the
mask constructors (which self-check before returning) can share one
implementation without import cycles.

Grid convention used across the package: ``grid[j, k]`` is the coefficient of
``x^j y^k`` (rows follow the first frequency variable). Polyphase values are
extracted positionally from the printed symmetric layout: ``a_i`` at
``(2*(i//t), 2*(i%t))`` and ``b_i`` one column to the right, for a ``2t x 2t``
grid; odd rows are the centro-symmetric mirrors of even rows.
"""

from __future__ import annotations

import numpy as np

# Index pairs (i, j) of the quadratic forms sum_{v=a,b} v_i v_j = 0.
# One row per equation; the 13th equation is the sum-of-squares normalization.
ORTHOGONALITY_PAIRS_66 = (
    ((0, 8),),
    ((2, 6),),
    ((1, 6), (2, 7)),
    ((0, 7), (1, 8)),
    ((2, 3), (5, 6)),
    ((0, 5), (3, 8)),
    ((0, 6), (1, 7), (2, 8)),
    ((0, 2), (3, 5), (6, 8)),
    ((1, 3), (2, 4), (4, 6), (5, 7)),
    ((0, 4), (1, 5), (3, 7), (4, 8)),
    ((0, 3), (1, 4), (2, 5), (3, 6), (4, 7), (5, 8)),
    ((0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8)),
)


def quadratic_residuals(a: np.ndarray, b: np.ndarray, pairs) -> np.ndarray:
    out = np.empty(len(pairs))
    for n, eq in enumerate(pairs):
        s = 0.0
        for i, j in eq:
            s += a[i] * a[j] + b[i] * b[j]
        out[n] = abs(s)
    return out


def orthogonality_residuals_66(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Absolute residuals of the 13 nonlinear orthogonality equations."""
    res = quadratic_residuals(a, b, ORTHOGONALITY_PAIRS_66)
    norm = abs(float(np.dot(a, a) + np.dot(b, b)) - 0.125)
    return np.concatenate([res, [norm]])


def moment_residuals_66(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Absolute residuals of the six linear first-moment equations."""
    return np.array([
        abs(a[0] + a[1] + a[2] - (b[0] + b[1] + b[2])),
        abs(a[3] + a[4] + a[5] - (b[3] + b[4] + b[5])),
        abs(a[6] + a[7] + a[8] - (b[6] + b[7] + b[8])),
        abs(a[0] + a[3] + a[6] - (b[2] + b[5] + b[8])),
        abs(a[1] + a[4] + a[7] - (b[1] + b[4] + b[7])),
        abs(a[2] + a[5] + a[8] - (b[0] + b[3] + b[6])),
    ])


def existence_residual(grid: np.ndarray) -> float:
    return abs(float(grid.sum()) - 1.0)


def symmetry_residual(grid: np.ndarray) -> float:
    return float(np.abs(grid - grid[::-1, ::-1]).max())


def evaluate_grid(grid: np.ndarray, w1: np.ndarray, w2: np.ndarray,
                  origin=(0, 0)) -> np.ndarray:
    """m(e^{i w1}, e^{i w2}) on the tensor grid of the two frequency vectors."""
    w1 = np.atleast_1d(np.asarray(w1, dtype=float))
    w2 = np.atleast_1d(np.asarray(w2, dtype=float))
    j = np.arange(grid.shape[0]) - origin[0]
    k = np.arange(grid.shape[1]) - origin[1]
    ex = np.exp(1j * np.outer(w1, j))
    ey = np.exp(1j * np.outer(k, w2))
    return ex @ grid @ ey


def qmf_grid_residual(grid: np.ndarray, grid_n: int, origin=(0, 0)) -> float:
    """Max deviation of the four-term squared-modulus identity on a uniform grid."""
    w = 2.0 * np.pi * np.arange(grid_n) / grid_n
    total = np.zeros((grid_n, grid_n))
    for s1 in (0.0, np.pi):
        for s2 in (0.0, np.pi):
            m = evaluate_grid(grid, w + s1, w + s2, origin)
            total += np.abs(m) ** 2
    return float(np.abs(total - 1.0).max())
