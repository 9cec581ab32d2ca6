"""Bivariate symmetric wavelet filters with dilation 2I.

Parameterized 6x6 filter families (one orthonormal two-parameter family, two
tight-frame families), full verification of the defining condition system,
transfer-matrix orthonormality tests, cascade approximation of the scaling
function, a nonseparable image filter bank, and the 8x8 necessary-condition
machinery.
"""

from .cascade import (CorrelationVector, ScalingGrid, autocorrelation,
                      cascade_iterate, transfer_consistency)
from .dwt import (CompactionReport, ComparisonRow, SubbandSet, analyze,
                  analyze_multi, compare_filters, energy_compaction, synthesize,
                  synthesize_multi)
from .errors import (BisymwaveError, ConstructionInconsistent, DimensionMismatch,
                     InvalidBranch, LemmaViolated, LevelsOutOfRange, NoConvergence,
                     NotSymmetric, OddDimensions, ParseError, SupportTooLarge,
                     WrongSize)
from .io import read_mask, read_pgm, write_mask, write_pgm
from .lawton import (AxisCycle, LawtonMatrix, SpectrumReport, axis_cycle_check,
                     axis_restriction, build_lawton_matrix, doubling_cycles,
                     unit_eigenvalue_multiplicity)
from .masks import (Case1Params, Case2aParams, FilterMask, PolyphaseCoeffs,
                    WaveletBank, bank_for_mask, case1_mask, case2a_mask,
                    case4a_masks, d4_lowpass, d4_tensor_mask, derive_wavelet_bank,
                    embed_mask, haar_mask, polyphase_assemble, polyphase_split,
                    tensor_bank, transpose_mask)
from .moments8 import (MomentCase, MomentSums8, check_moment_equations8,
                       check_qmf8, enumerate_moment_cases, polyphase8_assemble,
                       polyphase8_split, solve_moment_sums)
from .scan import ScanRecord, scan_case1
from .verify import (VerificationReport, check_existence, check_moment_equations,
                     check_orthogonality_equations, check_symmetry,
                     check_vanishing_moments, qmf_residual_on_grid, verify_mask)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
