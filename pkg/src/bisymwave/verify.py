"""Residual checks for every condition a candidate mask must satisfy.

Two independent formulations of the orthogonality condition are provided on
purpose: the 13 algebraic equations on the polyphase values and the
frequency-domain four-term identity sampled on a grid. They must agree, and
the test suite cross-validates them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _equations as eq
from .errors import WrongSize
from .masks import FilterMask, PolyphaseCoeffs, polyphase_split

DEFAULT_TOL = 1e-10


def check_existence(mask: FilterMask) -> float:
    """|sum of taps - 1| (the filter must preserve the mean)."""
    return eq.existence_residual(mask.coeffs)


def check_symmetry(mask: FilterMask, n: int) -> float:
    """Max |c[j,k] - c[n-j,n-k]| for an (n+1)x(n+1) grid."""
    if mask.coeffs.shape != (n + 1, n + 1):
        raise WrongSize(f"expected a {(n + 1, n + 1)} grid, got {mask.coeffs.shape}")
    return eq.symmetry_residual(mask.coeffs)


def check_orthogonality_equations(coeffs: PolyphaseCoeffs) -> np.ndarray:
    """The 13 algebraic orthogonality residuals of a 6x6 layout."""
    if coeffs.size != 6:
        raise WrongSize("the 13-equation system applies to the 6x6 layout")
    return eq.orthogonality_residuals_66(coeffs.a, coeffs.b)


def check_moment_equations(coeffs: PolyphaseCoeffs) -> np.ndarray:
    """The six linear first-moment residuals of a 6x6 layout."""
    if coeffs.size != 6:
        raise WrongSize("the six-equation system applies to the 6x6 layout")
    return eq.moment_residuals_66(coeffs.a, coeffs.b)


def check_vanishing_moments(mask: FilterMask, m: int, samples: int = 16) -> float:
    """Residual of the order-m vanishing-moment property.

    For k < m, the k-th partial derivative of the symbol must vanish on the
    line x = -1 (and symmetrically y = -1). Each derivative trace is a
    trigonometric polynomial in the remaining variable; it is sampled at
    ``samples`` points on the unit circle, which over-determines it several
    times for the supported grid sizes.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    theta = 2.0 * np.pi * np.arange(samples) / samples
    z = np.exp(1j * theta)
    worst = 0.0
    for grid in (mask.coeffs, mask.coeffs.T):
        nr = grid.shape[0]
        j = np.arange(nr, dtype=float)
        fall = np.ones(nr)
        sign = (-1.0) ** j
        for k in range(m):
            if k > 0:
                fall *= np.maximum(j - (k - 1), 0.0)
                sign = (-1.0) ** np.maximum(j - k, 0.0)
            trace = (fall * sign) @ grid           # coeffs of the 1-D trace
            vals = np.polynomial.polynomial.polyval(z, trace)
            worst = max(worst, float(np.abs(vals).max()))
    return worst


def qmf_residual_on_grid(mask: FilterMask, grid_n: int = 64) -> float:
    """Max over a grid_n x grid_n frequency grid of |sum of 4 squared moduli - 1|."""
    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    return eq.qmf_grid_residual(mask.coeffs, grid_n, mask.origin)


@dataclass(frozen=True, eq=False)
class VerificationReport:
    """All residuals of one mask, with per-category verdicts at ``tol``.

    ``orthogonality_residuals`` and ``moment_residuals`` are None when the
    mask is not a symmetric origin-zero 6x6 grid (they are layout-specific).
    """

    tol: float
    existence_residual: float
    symmetry_residual: float | None
    orthogonality_residuals: np.ndarray | None
    moment_residuals: np.ndarray | None
    qmf_grid_max_residual: float

    @property
    def existence_pass(self) -> bool:
        return self.existence_residual < self.tol

    @property
    def symmetry_pass(self) -> bool | None:
        if self.symmetry_residual is None:
            return None
        return self.symmetry_residual < self.tol

    @property
    def orthogonality_pass(self) -> bool | None:
        if self.orthogonality_residuals is None:
            return None
        return bool(self.orthogonality_residuals.max() < self.tol)

    @property
    def moment_pass(self) -> bool | None:
        if self.moment_residuals is None:
            return None
        return bool(self.moment_residuals.max() < self.tol)

    @property
    def qmf_pass(self) -> bool:
        return self.qmf_grid_max_residual < self.tol

    @property
    def overall_pass(self) -> bool:
        """Existence and the frequency identity, plus the algebraic system when applicable."""
        checks = [self.existence_pass, self.qmf_pass]
        if self.orthogonality_residuals is not None:
            checks += [self.orthogonality_pass, self.moment_pass, self.symmetry_pass]
        return all(checks)


def verify_mask(mask: FilterMask, tol: float = DEFAULT_TOL, grid_n: int = 64) -> VerificationReport:
    """Run every applicable check on a mask and collect the residuals."""
    existence = check_existence(mask)
    qmf = qmf_residual_on_grid(mask, grid_n)
    symmetry = None
    ortho = None
    moments = None
    if mask.rows == mask.cols:
        symmetry = eq.symmetry_residual(mask.coeffs)
        if mask.coeffs.shape == (6, 6) and mask.origin == (0, 0) and symmetry < tol:
            ab = polyphase_split(mask, tol=max(tol, 1e-12))
            ortho = check_orthogonality_equations(ab)
            moments = check_moment_equations(ab)
    return VerificationReport(
        tol=tol,
        existence_residual=existence,
        symmetry_residual=symmetry,
        orthogonality_residuals=ortho,
        moment_residuals=moments,
        qmf_grid_max_residual=qmf,
    )
