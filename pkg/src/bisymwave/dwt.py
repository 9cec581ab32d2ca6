"""One- and multi-level nonseparable filter-bank transform for images.

Filters are the bank masks scaled by 2, which gives each filter unit L2 norm
for any bank satisfying the four-term identity, so analysis is an isometry.
Boundaries are periodic, downsampling keeps even-indexed samples, and
synthesis is the exact adjoint, so reconstruction is exact for every
tight-frame bank.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, OddDimensions
from .masks import WaveletBank

SUBBAND_NAMES = ("approx", "detail1", "detail2", "detail3")


def as_image(pixels) -> np.ndarray:
    """Validate and convert to a 2-D float image."""
    img = np.asarray(pixels, dtype=float)
    if img.ndim != 2 or min(img.shape) < 2:
        raise DimensionMismatch("image must be 2-D with both sides >= 2")
    if not np.isfinite(img).all():
        raise ValueError("image has non-finite pixels")
    return img


@dataclass(frozen=True, eq=False)
class SubbandSet:
    """Four subbands of a one-level analysis plus bookkeeping."""

    approx: np.ndarray
    details: tuple[np.ndarray, np.ndarray, np.ndarray]
    bank_name: str = ""
    boundary: str = "periodic"

    @property
    def bands(self) -> tuple[np.ndarray, ...]:
        return (self.approx,) + tuple(self.details)

    def energies(self) -> np.ndarray:
        return np.array([float(np.sum(band * band)) for band in self.bands])

    def total_energy(self) -> float:
        return float(self.energies().sum())


def _correlate_down(image: np.ndarray, taps: np.ndarray) -> np.ndarray:
    out = np.zeros((image.shape[0] // 2, image.shape[1] // 2))
    for (j, k), w in np.ndenumerate(taps):
        if w == 0.0:
            continue
        out += w * np.roll(image, (-j, -k), axis=(0, 1))[::2, ::2]
    return out


def _up_convolve(band: np.ndarray, taps: np.ndarray, shape) -> np.ndarray:
    up = np.zeros(shape)
    up[::2, ::2] = band
    out = np.zeros(shape)
    for (j, k), w in np.ndenumerate(taps):
        if w == 0.0:
            continue
        out += w * np.roll(up, (j, k), axis=(0, 1))
    return out


def analyze(image, bank: WaveletBank) -> SubbandSet:
    """One-level analysis: periodic correlation with each filter, then 2x decimation."""
    img = as_image(image)
    if img.shape[0] % 2 or img.shape[1] % 2:
        raise OddDimensions(f"image dimensions must be even, got {img.shape}")
    bands = [_correlate_down(img, 2.0 * f.coeffs) for f in bank.filters]
    return SubbandSet(approx=bands[0], details=tuple(bands[1:]), bank_name=bank.name)


def synthesize(subbands: SubbandSet, bank: WaveletBank) -> np.ndarray:
    """Adjoint of :func:`analyze`: upsample, filter, and sum the four branches."""
    shapes = {band.shape for band in subbands.bands}
    if len(shapes) != 1:
        raise DimensionMismatch(f"subband shapes differ: {sorted(shapes)}")
    h, w = subbands.approx.shape
    out_shape = (2 * h, 2 * w)
    img = np.zeros(out_shape)
    for band, f in zip(subbands.bands, bank.filters):
        img += _up_convolve(band, 2.0 * f.coeffs, out_shape)
    return img


def analyze_multi(image, bank: WaveletBank, depth: int) -> list[SubbandSet]:
    """Recurse on the approximation band; depth limited by even dimensions."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    out = []
    current = as_image(image)
    for _ in range(depth):
        level = analyze(current, bank)
        out.append(level)
        current = level.approx
    return out


def synthesize_multi(levels: list[SubbandSet], bank: WaveletBank) -> np.ndarray:
    current = levels[-1].approx
    for level in reversed(levels):
        current = synthesize(
            SubbandSet(approx=current, details=level.details, bank_name=level.bank_name),
            bank)
    return current


@dataclass(frozen=True, eq=False)
class CompactionReport:
    """Energy distribution of one subband set."""

    fractions: tuple[float, ...]     # per subband, ordered as SUBBAND_NAMES
    coeffs_for_99: int               # smallest count of coefficients holding 99% energy
    total_energy: float


def energy_compaction(subbands: SubbandSet) -> CompactionReport:
    energies = subbands.energies()
    total = float(energies.sum())
    if total == 0.0:
        return CompactionReport(fractions=(0.0,) * 4, coeffs_for_99=0, total_energy=0.0)
    flat = np.sort(np.concatenate([band.ravel() ** 2 for band in subbands.bands]))[::-1]
    cumulative = np.cumsum(flat)
    n99 = int(np.searchsorted(cumulative, 0.99 * total) + 1)
    return CompactionReport(fractions=tuple(energies / total), coeffs_for_99=n99,
                            total_energy=total)


@dataclass(frozen=True, eq=False)
class ComparisonRow:
    bank_name: str
    fractions: tuple[float, ...]
    coeffs_for_99: int
    reconstruction_error: float      # relative L2 of synthesize(analyze(.))


def compare_filters(image, banks: list[WaveletBank]) -> list[ComparisonRow]:
    """Side-by-side energy compaction and reconstruction residual per bank."""
    img = as_image(image)
    norm = float(np.linalg.norm(img))
    rows = []
    for bank in banks:
        subbands = analyze(img, bank)
        report = energy_compaction(subbands)
        recon = synthesize(subbands, bank)
        err = float(np.linalg.norm(recon - img)) / norm if norm else 0.0
        rows.append(ComparisonRow(bank_name=bank.name, fractions=report.fractions,
                                  coeffs_for_99=report.coeffs_for_99,
                                  reconstruction_error=err))
    return rows
