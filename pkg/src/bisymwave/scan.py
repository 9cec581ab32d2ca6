"""Parameter-space sweep over the two-parameter orthonormal family."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cascade import cascade_iterate
from .lawton import build_lawton_matrix, unit_eigenvalue_multiplicity
from .masks import Case1Params, case1_mask
from .verify import qmf_residual_on_grid

SCAN_HEADER = ["beta", "gamma", "qmf_residual", "unit_multiplicity",
               "spectral_gap", "cascade_delta"]


@dataclass(frozen=True)
class ScanRecord:
    beta: float
    gamma: float
    qmf_residual: float
    unit_multiplicity: int
    spectral_gap: float
    cascade_delta: float

    def as_row(self):
        return (self.beta, self.gamma, self.qmf_residual, self.unit_multiplicity,
                self.spectral_gap, self.cascade_delta)


def scan_case1(grid_n: int, qmf_grid: int = 64, eig_tol: float = 1e-8,
               cascade_level: int = 4, oversample: int = 2) -> list[ScanRecord]:
    """Evaluate the family on a uniform grid_n x grid_n (beta, gamma) grid.

    Per-point failures are recorded as NaN fields rather than aborting the
    sweep. Records are sorted by (beta, gamma) so the output is independent
    of evaluation order.
    """
    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    records = []
    step = 2.0 * math.pi / grid_n
    for i in range(grid_n):
        for j in range(grid_n):
            beta, gamma = i * step, j * step
            try:
                mask = case1_mask(Case1Params(beta, gamma))
                qmf = qmf_residual_on_grid(mask, qmf_grid)
                report = unit_eigenvalue_multiplicity(build_lawton_matrix(mask), eig_tol)
                grid = cascade_iterate(mask, cascade_level, oversample)
                delta = grid.deltas[-1] if grid.deltas else 0.0
                records.append(ScanRecord(beta=beta, gamma=gamma, qmf_residual=qmf,
                                          unit_multiplicity=report.unit_multiplicity,
                                          spectral_gap=report.spectral_gap,
                                          cascade_delta=delta))
            except Exception:
                records.append(ScanRecord(beta=beta, gamma=gamma, qmf_residual=math.nan,
                                          unit_multiplicity=0, spectral_gap=math.nan,
                                          cascade_delta=math.nan))
    records.sort(key=lambda r: (r.beta, r.gamma))
    return records
