"""Refinement-equation iteration on dyadic grids and shift correlations.

The iteration starts from the indicator of the unit square and applies
phi <- 4 sum_k h_k phi(2 . - k), doubling the grid each time. Each iterate is
exactly piecewise constant on its grid, so the stored cell values are exact
and the discrete integral is preserved to rounding.

A subtlety drives the ``oversample`` knob: every such iterate has exactly
orthonormal integer shifts (the delta vector is fixed by the transfer
matrix), so the iterate's own correlations can never reveal a defective
limit. Refining ``oversample`` extra times and averaging back down measures
the weak limit instead: the pooled cells converge to the cell averages of
the limit function, whose correlations do expose non-orthonormal families.
Convergence of the iteration itself is reported (``deltas``), never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LevelsOutOfRange, WrongSize
from .lawton import flat_index
from .masks import FilterMask

MAX_LEVEL = 12
_MAX_INTERNAL_LEVEL = 11  # keeps the finest internal grid near (5*2^11)^2 doubles
DEFAULT_OVERSAMPLE = 2


@dataclass(frozen=True, eq=False)
class ScalingGrid:
    """Cell averages of the approximated scaling function on [0, n]^2."""

    level: int                       # grid step 2^-level
    support_n: int                   # support is [0, support_n]^2
    samples: np.ndarray              # (n*2^level)^2 cell values, row = first variable
    deltas: tuple[float, ...]        # L2 distance between consecutive iterates
    oversample: int                  # extra refinements averaged back down

    @property
    def cell_area(self) -> float:
        return 4.0 ** (-self.level)

    def riemann_sum(self) -> float:
        return float(self.samples.sum()) * self.cell_area


@dataclass(frozen=True, eq=False)
class CorrelationVector:
    """Estimated shift inner products for shifts in [-4, 4]^2."""

    values: np.ndarray               # 9x9, values[l1+4, l2+4]

    def flatten(self) -> np.ndarray:
        """1-D copy in the transfer-matrix ordering."""
        return self.values.ravel().copy()

    def delta_deviation(self) -> float:
        dev = self.values.copy()
        dev[4, 4] -= 1.0
        return float(np.abs(dev).max())


def _refine(samples: np.ndarray, h: np.ndarray, tap_step: int) -> np.ndarray:
    """One refinement application, doubling the grid resolution."""
    n1, n2 = samples.shape
    out = np.zeros((2 * n1, 2 * n2))
    for k1 in range(h.shape[0]):
        for k2 in range(h.shape[1]):
            w = h[k1, k2]
            if w == 0.0:
                continue
            r, c = k1 * tap_step, k2 * tap_step
            out[r:r + n1, c:c + n2] += (4.0 * w) * samples
    return out


def _pool(samples: np.ndarray) -> np.ndarray:
    return 0.25 * (samples[::2, ::2] + samples[1::2, ::2]
                   + samples[::2, 1::2] + samples[1::2, 1::2])


def cascade_iterate(mask: FilterMask, levels: int,
                    oversample: int = DEFAULT_OVERSAMPLE) -> ScalingGrid:
    """Iterate the refinement equation to a dyadic grid of step 2^-levels.

    ``oversample`` extra refinements are run past the target resolution and
    averaged back down (capped so the finest internal grid stays tractable);
    set it to 0 for the raw ``levels``-th iterate.
    """
    if not 1 <= levels <= MAX_LEVEL:
        raise LevelsOutOfRange(f"levels must be in [1, {MAX_LEVEL}], got {levels}")
    if oversample < 0:
        raise ValueError("oversample must be >= 0")
    h = mask.coeffs
    if h.shape[0] != h.shape[1]:
        raise WrongSize("cascade iteration expects a square mask grid")
    if abs(h.sum() - 1.0) > 1e-6:
        raise ValueError("mask must have unit tap sum (mean preservation)")
    n = h.shape[0] - 1
    if n < 1:
        raise WrongSize("mask support is empty")

    extra = min(oversample, max(0, _MAX_INTERNAL_LEVEL - levels))
    samples = np.zeros((n, n))
    samples[0, 0] = 1.0  # indicator of [0, 1)^2 on the level-0 grid
    deltas = []
    for lev in range(levels + extra):
        refined = _refine(samples, h, 2 ** lev)
        up = np.repeat(np.repeat(samples, 2, axis=0), 2, axis=1)
        deltas.append(float(np.sqrt(np.sum((refined - up) ** 2) * 4.0 ** (-(lev + 1)))))
        samples = refined
    for _ in range(extra):
        samples = _pool(samples)
    return ScalingGrid(level=levels, support_n=n, samples=samples,
                       deltas=tuple(deltas), oversample=extra)


def autocorrelation(grid: ScalingGrid) -> CorrelationVector:
    """Riemann estimates of the 81 integer-shift inner products of the grid."""
    s = grid.samples
    m = 2 ** grid.level
    area = grid.cell_area
    values = np.zeros((9, 9))
    n1, n2 = s.shape
    for l1 in range(-4, 5):
        for l2 in range(-4, 5):
            s1, s2 = l1 * m, l2 * m
            r_lo, r_hi = max(0, s1), min(n1, n1 + s1)
            c_lo, c_hi = max(0, s2), min(n2, n2 + s2)
            if r_lo < r_hi and c_lo < c_hi:
                prod = s[r_lo:r_hi, c_lo:c_hi] * s[r_lo - s1:r_hi - s1, c_lo - s2:c_hi - s2]
                values[l1 + 4, l2 + 4] = float(prod.sum()) * area
    return CorrelationVector(values=values)


def transfer_consistency(corr: CorrelationVector, matrix) -> float:
    """max |alpha - A alpha| for the flattened correlations (dual-route check)."""
    v = corr.flatten()
    return float(np.abs(v - matrix.entries @ v).max())


def delta_correlation() -> CorrelationVector:
    values = np.zeros((9, 9))
    values[flat_index(0, 0) // 9, flat_index(0, 0) % 9] = 1.0
    return CorrelationVector(values=values)
