"""Transfer-matrix orthonormality test and axis-cycle obstruction search.

The 81x81 transfer matrix acts on vectors of shift correlations indexed by
shifts in [-4, 4]^2. The correlation vector of an admissible scaling function
is a fixed vector; the delta vector always is one. Orthonormality of the
integer shifts is certified by the eigenvalue 1 being simple, and refuted by
a nontrivial cycle of the angle-doubling map on which an axis restriction of
the symbol has modulus one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import NoConvergence, SupportTooLarge
from .masks import FilterMask

DIM = 81
_SHIFT_RANGE = 4  # shifts in [-4, 4]^2 cover supports inside [0, 5]^2


def flat_index(l1: int, l2: int) -> int:
    """Row-major position of shift (l1, l2): (l1+4)*9 + (l2+4)."""
    return (l1 + _SHIFT_RANGE) * 9 + (l2 + _SHIFT_RANGE)


def shift_of(index: int) -> tuple[int, int]:
    return index // 9 - _SHIFT_RANGE, index % 9 - _SHIFT_RANGE


@dataclass(frozen=True, eq=False)
class LawtonMatrix:
    """Transfer matrix with its fixed shift ordering."""

    entries: np.ndarray
    mask_name: str = ""

    @property
    def dim(self) -> int:
        return DIM

    def delta_vector(self) -> np.ndarray:
        d = np.zeros(DIM)
        d[flat_index(0, 0)] = 1.0
        return d


def _tap_autocorrelation(h: np.ndarray) -> np.ndarray:
    """r[d1, d2] = sum_k h[k] h[k+d], dense over all overlapping offsets."""
    n1, n2 = h.shape
    r = np.zeros((2 * n1 - 1, 2 * n2 - 1))
    for d1 in range(-(n1 - 1), n1):
        for d2 in range(-(n2 - 1), n2):
            lo1, hi1 = max(0, -d1), min(n1, n1 - d1)
            lo2, hi2 = max(0, -d2), min(n2, n2 - d2)
            block = h[lo1:hi1, lo2:hi2] * h[lo1 + d1:hi1 + d1, lo2 + d2:hi2 + d2]
            r[d1 + n1 - 1, d2 + n2 - 1] = block.sum()
    return r


def build_lawton_matrix(mask: FilterMask) -> LawtonMatrix:
    """A[(l1,l2),(n1,n2)] = 4 sum_k h_k h_{k + n - 2l}, shifts in [-4,4]^2."""
    h = mask.coeffs
    if h.shape[0] > 6 or h.shape[1] > 6:
        raise SupportTooLarge(f"support {h.shape} exceeds the 6x6 index range")
    r = _tap_autocorrelation(h)
    c1, c2 = h.shape[0] - 1, h.shape[1] - 1  # center offsets into r
    a = np.zeros((DIM, DIM))
    rng = range(-_SHIFT_RANGE, _SHIFT_RANGE + 1)
    for l1 in rng:
        for l2 in rng:
            row = flat_index(l1, l2)
            for n1 in rng:
                d1 = n1 - 2 * l1
                if abs(d1) > c1:
                    continue
                for n2 in rng:
                    d2 = n2 - 2 * l2
                    if abs(d2) > c2:
                        continue
                    a[row, flat_index(n1, n2)] = 4.0 * r[d1 + c1, d2 + c2]
    return LawtonMatrix(a, mask_name=mask.name)


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """Eigenvalue census of a transfer matrix around lambda = 1."""

    eigenvalues: np.ndarray          # sorted by (re, im), descending re
    unit_multiplicity: int           # count of |lambda - 1| < tol
    spectral_gap: float              # distance from 1 to the nearest other eigenvalue
    max_other_modulus: float         # spectral radius off the unit cluster
    tol: float
    verdict: str                     # orthonormal | degenerate | inconclusive


def unit_eigenvalue_multiplicity(matrix: LawtonMatrix, tol: float = 1e-8) -> SpectrumReport:
    """Full dense spectrum; verdict on the multiplicity of eigenvalue 1.

    orthonormal: exactly one eigenvalue within tol of 1 and the next one at
    least 10*tol away; degenerate: two or more in the cluster; inconclusive
    otherwise (guard band, or no unit eigenvalue at all).
    """
    try:
        ev = np.linalg.eigvals(matrix.entries)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - library iteration cap
        raise NoConvergence("eigenvalue iteration did not converge") from exc
    order = np.lexsort((ev.imag, -ev.real))
    ev = ev[order]
    dist = np.abs(ev - 1.0)
    cluster = dist < tol
    mult = int(cluster.sum())
    others = dist[~cluster]
    gap = float(others.min()) if others.size else math.inf
    max_other = float(np.abs(ev[~cluster]).max()) if (~cluster).any() else 0.0
    if mult >= 2:
        verdict = "degenerate"
    elif mult == 1 and gap >= 10.0 * tol:
        verdict = "orthonormal"
    else:
        verdict = "inconclusive"
    return SpectrumReport(eigenvalues=ev, unit_multiplicity=mult, spectral_gap=gap,
                          max_other_modulus=max_other, tol=tol, verdict=verdict)


# ---------------------------------------------------------------------------
# axis restrictions and doubling-map cycles
# ---------------------------------------------------------------------------

def axis_restriction(mask: FilterMask, axis: str) -> np.ndarray:
    """Coefficients of m restricted to one axis: m(z, 1) for 'x', m(1, z) for 'y'."""
    if axis == "x":
        return mask.coeffs.sum(axis=1)
    if axis == "y":
        return mask.coeffs.sum(axis=0)
    raise ValueError("axis must be 'x' or 'y'")


@dataclass(frozen=True)
class AxisCycle:
    """A nontrivial doubling-map cycle on which |m| = 1 along one axis."""

    axis: str
    denominator: int
    numerators: tuple[int, ...]      # cycle of k in xi = 2 pi k / denominator

    @property
    def points(self) -> tuple[float, ...]:
        return tuple(2.0 * math.pi * k / self.denominator for k in self.numerators)


def doubling_cycles(max_denominator: int):
    """All cycles of xi -> 2 xi mod 2 pi with xi = 2 pi k/d, d odd <= max_denominator.

    Every periodic orbit of the doubling map is of this rational form, so the
    enumeration is exact. The trivial fixed point 0 is excluded.
    """
    seen = set()
    out = []
    for d in range(3, max_denominator + 1, 2):
        for k in range(1, d):
            if gcd(k, d) != 1:
                continue
            orbit = []
            x = k
            while True:
                orbit.append(x)
                x = (2 * x) % d
                if x == k:
                    break
            key = (d, min(orbit))
            if key not in seen:
                seen.add(key)
                out.append((d, tuple(orbit)))
    return out


def axis_cycle_check(mask: FilterMask, max_denominator: int = 64,
                     tol: float = 1e-10) -> list[AxisCycle]:
    """Cycles of the doubling map on which an axis restriction has |m| = 1.

    Any such cycle obstructs orthonormality of the integer shifts even though
    the four-term identity holds.
    """
    if max_denominator < 3:
        raise ValueError("max_denominator must be >= 3")
    cycles = doubling_cycles(max_denominator)
    found = []
    for axis in ("x", "y"):
        coeff = axis_restriction(mask, axis)
        for d, orbit in cycles:
            xs = 2.0 * np.pi * np.array(orbit) / d
            vals = np.polynomial.polynomial.polyval(np.exp(1j * xs), coeff)
            if np.all(np.abs(np.abs(vals) - 1.0) < tol):
                found.append(AxisCycle(axis=axis, denominator=d, numerators=orbit))
    return found
