"""Necessary conditions for 8x8 symmetric filters.

The 8x8 symmetric layout has 16+16 distinct values. Property (ii) gives 25
quadratic equations plus a sum-of-squares normalization; one vanishing moment
gives eight linear equations. The quad-sum structure of a valid solution is
pinned down by a small set of closure relations (the moment-sum lemma), which
is what :func:`solve_moment_sums` checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _equations as eq
from .errors import LemmaViolated, WrongSize
from .masks import FilterMask, PolyphaseCoeffs, polyphase_assemble, polyphase_split

# Quadratic equations sum_{v=a,b} sum v_i v_j = 0 for the 8x8 layout.
ORTHOGONALITY_PAIRS_88 = (
    ((0, 15),),
    ((3, 12),),
    ((0, 11), (4, 15)),
    ((0, 14), (1, 15)),
    ((2, 12), (3, 13)),
    ((3, 8), (7, 12)),
    ((0, 7), (4, 11), (8, 15)),
    ((0, 13), (1, 14), (2, 15)),
    ((1, 12), (2, 13), (3, 14)),
    ((3, 4), (7, 8), (11, 12)),
    ((0, 3), (4, 7), (8, 11), (12, 15)),
    ((0, 10), (1, 11), (4, 14), (5, 15)),
    ((0, 12), (1, 13), (2, 14), (3, 15)),
    ((2, 8), (3, 9), (6, 12), (7, 13)),
    ((0, 6), (1, 7), (4, 10), (5, 11), (8, 14), (9, 15)),
    ((0, 9), (1, 10), (2, 11), (4, 13), (5, 14), (6, 15)),
    ((1, 8), (2, 9), (3, 10), (5, 12), (6, 13), (7, 14)),
    ((2, 4), (3, 5), (6, 8), (7, 9), (10, 12), (11, 13)),
    ((0, 8), (1, 9), (2, 10), (3, 11), (4, 12), (5, 13), (6, 14), (7, 15)),
    ((0, 2), (1, 3), (4, 6), (5, 7), (8, 10), (9, 11), (12, 14), (13, 15)),
    ((0, 5), (1, 6), (2, 7), (4, 9), (5, 10), (6, 11), (8, 13), (9, 14), (10, 15)),
    ((1, 4), (2, 5), (3, 6), (5, 8), (6, 9), (7, 10), (9, 12), (10, 13), (11, 14)),
    ((0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (8, 9), (9, 10), (10, 11),
     (12, 13), (13, 14), (14, 15)),
    ((0, 4), (1, 5), (2, 6), (3, 7), (4, 8), (5, 9), (6, 10), (7, 11), (8, 12),
     (9, 13), (10, 14), (11, 15)),
)


def polyphase8_split(mask: FilterMask, tol: float = 1e-12) -> PolyphaseCoeffs:
    """Distinct layout values of a centro-symmetric 8x8 mask."""
    if mask.coeffs.shape != (8, 8):
        raise WrongSize(f"expected an 8x8 grid, got {mask.coeffs.shape}")
    return polyphase_split(mask, tol=tol)


def polyphase8_assemble(coeffs: PolyphaseCoeffs, **mask_kw) -> FilterMask:
    if coeffs.size != 8:
        raise WrongSize("expected size-16 polyphase vectors")
    return polyphase_assemble(coeffs, **mask_kw)


def check_qmf8(coeffs: PolyphaseCoeffs) -> tuple[np.ndarray, float]:
    """25 quadratic residuals plus the |sum - 1/2| residual of the tap total."""
    if coeffs.size != 8:
        raise WrongSize("the 25-equation system applies to the 8x8 layout")
    a, b = coeffs.a, coeffs.b
    res = eq.quadratic_residuals(a, b, ORTHOGONALITY_PAIRS_88)
    norm = abs(float(np.dot(a, a) + np.dot(b, b)) - 0.125)
    residuals = np.concatenate([res, [norm]])
    sum_residual = abs(float(a.sum() + b.sum()) - 0.5)
    return residuals, sum_residual


def check_moment_equations8(coeffs: PolyphaseCoeffs) -> np.ndarray:
    """The eight linear first-moment residuals of the 8x8 layout."""
    if coeffs.size != 8:
        raise WrongSize("the eight-equation system applies to the 8x8 layout")
    a, b = coeffs.a, coeffs.b
    out = []
    for r in range(4):
        out.append(abs(a[4 * r:4 * r + 4].sum() - b[4 * r:4 * r + 4].sum()))
    for c in range(4):
        out.append(abs(a[c::4].sum() - b[3 - c::4].sum()))
    return np.array(out)


@dataclass(frozen=True)
class MomentSums8:
    """The eight quad-sum parameters with their angles."""

    r0: float
    s0: float
    t0: float
    u0: float
    r1: float
    s1: float
    t1: float
    u1: float

    @property
    def alpha8(self) -> float:
        return math.atan2(4.0 * self.s1, 4.0 * self.r1)

    @property
    def beta8(self) -> float:
        return math.atan2(4.0 * self.u1, 4.0 * self.t1)


_GUARD_BAND = 1e-6


def _classify_quarter(value: float, name: str) -> float:
    """Snap to the nearest of {0, 1/4}; anything in between is a violation."""
    if abs(value) < _GUARD_BAND:
        return 0.0
    if abs(value - 0.25) < _GUARD_BAND:
        return 0.25
    raise LemmaViolated(f"{name} must be 0 or 1/4", value)


def solve_moment_sums(coeffs: PolyphaseCoeffs, tol: float = 1e-10) -> MomentSums8:
    """Recover the quad-sum parameters and verify every closure relation.

    Raises LemmaViolated naming the first failing relation; this is the
    necessary-condition test for 8x8 candidates.
    """
    if coeffs.size != 8:
        raise WrongSize("moment sums apply to the 8x8 layout")
    a, b = coeffs.a, coeffs.b
    qa = [float(a[c::4].sum()) for c in range(4)]
    qb = [float(b[c::4].sum()) for c in range(4)]
    ra = [float(a[4 * r:4 * r + 4].sum()) for r in range(4)]
    rb = [float(b[4 * r:4 * r + 4].sum()) for r in range(4)]

    r0, r1 = qa[0] + qa[2], qa[0] - qa[2]
    s0, s1 = qa[1] + qa[3], qa[1] - qa[3]
    t0, t1 = ra[0] + ra[2], ra[0] - ra[2]
    u0, u1 = ra[1] + ra[3], ra[1] - ra[3]

    checks = [
        ("r0 + s0 = 1/4", abs(r0 + s0 - 0.25)),
        ("r0 * s0 = 0", abs(r0 * s0)),
        ("t0 + u0 = 1/4", abs(t0 + u0 - 0.25)),
        ("t0 * u0 = 0", abs(t0 * u0)),
        ("(r0 + r1)(s0 - s1) = 0", abs((r0 + r1) * (s0 - s1))),
        ("(t0 + t1)(u0 - u1) = 0", abs((t0 + t1) * (u0 - u1))),
        ("r1^2 + s1^2 = 1/16", abs(r1 * r1 + s1 * s1 - 1.0 / 16.0)),
        ("t1^2 + u1^2 = 1/16", abs(t1 * t1 + u1 * u1 - 1.0 / 16.0)),
        ("b column quad 0 = (s0 - s1)/2", abs(qb[0] - (s0 - s1) / 2.0)),
        ("b column quad 1 = (r0 - r1)/2", abs(qb[1] - (r0 - r1) / 2.0)),
        ("b column quad 2 = (s0 + s1)/2", abs(qb[2] - (s0 + s1) / 2.0)),
        ("b column quad 3 = (r0 + r1)/2", abs(qb[3] - (r0 + r1) / 2.0)),
        ("b row quad 0 = (t0 + t1)/2", abs(rb[0] - (t0 + t1) / 2.0)),
        ("b row quad 1 = (u0 + u1)/2", abs(rb[1] - (u0 + u1) / 2.0)),
        ("b row quad 2 = (t0 - t1)/2", abs(rb[2] - (t0 - t1) / 2.0)),
        ("b row quad 3 = (u0 - u1)/2", abs(rb[3] - (u0 - u1) / 2.0)),
    ]
    for name, residual in checks:
        if residual > tol:
            raise LemmaViolated(name, residual)
    _classify_quarter(r0, "r0")
    _classify_quarter(s0, "s0")
    _classify_quarter(t0, "t0")
    _classify_quarter(u0, "u0")
    return MomentSums8(r0=r0, s0=s0, t0=t0, u0=u0, r1=r1, s1=s1, t1=t1, u1=u1)


def quad_sums_from(sums: MomentSums8) -> dict[str, float]:
    """Reassembled quad sums implied by the parameters (consistency helper)."""
    return {
        "a_col0": (sums.r0 + sums.r1) / 2.0,
        "a_col1": (sums.s0 + sums.s1) / 2.0,
        "a_col2": (sums.r0 - sums.r1) / 2.0,
        "a_col3": (sums.s0 - sums.s1) / 2.0,
        "a_row0": (sums.t0 + sums.t1) / 2.0,
        "a_row1": (sums.u0 + sums.u1) / 2.0,
        "a_row2": (sums.t0 - sums.t1) / 2.0,
        "a_row3": (sums.u0 - sums.u1) / 2.0,
    }


@dataclass(frozen=True)
class MomentCase:
    """One admissible sign assignment of the quad-sum parameters."""

    r0: float
    s0: float
    r_case: int                      # 1: (r1,s1)=(r0,s0); 2: (-r0,s0); 3: (-r0,-s0)
    t0: float
    u0: float
    t_case: int

    @property
    def r1(self) -> float:
        return self.r0 if self.r_case == 1 else -self.r0

    @property
    def s1(self) -> float:
        return -self.s0 if self.r_case == 3 else self.s0

    @property
    def t1(self) -> float:
        return self.t0 if self.t_case == 1 else -self.t0

    @property
    def u1(self) -> float:
        return -self.u0 if self.t_case == 3 else self.u0


def enumerate_moment_cases() -> list[MomentCase]:
    """All 36 sign assignments: 2 (r0,s0) roots x 3 sign cases, per axis pair."""
    roots = ((0.25, 0.0), (0.0, 0.25))
    out = []
    for r0, s0 in roots:
        for rc in (1, 2, 3):
            for t0, u0 in roots:
                for tc in (1, 2, 3):
                    out.append(MomentCase(r0=r0, s0=s0, r_case=rc, t0=t0, u0=u0, t_case=tc))
    return out
