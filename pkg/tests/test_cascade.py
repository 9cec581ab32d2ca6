import numpy as np
import pytest

from bisymwave import (Case1Params, LevelsOutOfRange, autocorrelation,
                       build_lawton_matrix, case1_mask, cascade_iterate,
                       embed_mask, transfer_consistency)

DELTA = np.zeros((9, 9))
DELTA[4, 4] = 1.0


def test_haar_is_fixed_point(haar):
    grid = cascade_iterate(haar, 6)
    n = 2 ** 6
    assert grid.samples.shape == (n, n)
    np.testing.assert_array_equal(grid.samples, np.ones((n, n)))
    assert grid.riemann_sum() == pytest.approx(1.0, abs=1e-15)
    assert all(d == 0.0 for d in grid.deltas)


def test_haar_embedded_support(haar):
    # embedding inside a 6x6 grid shifts the limit square but keeps it exact
    grid = cascade_iterate(embed_mask(haar, offset=(2, 2), rows=6, cols=6), 4,
                           oversample=0)
    block = grid.samples
    total = block.sum() * grid.cell_area
    assert total == pytest.approx(1.0, abs=1e-12)
    assert block.max() == pytest.approx(1.0, abs=1e-12)


def test_riemann_sum_preserved_everywhere(case1_sample, p3_first):
    for mask in (case1_sample, p3_first):
        for levels in (1, 3, 5):
            grid = cascade_iterate(mask, levels)
            assert grid.riemann_sum() == pytest.approx(1.0, abs=1e-12)


def test_levels_guard(haar):
    with pytest.raises(LevelsOutOfRange):
        cascade_iterate(haar, 0)
    with pytest.raises(LevelsOutOfRange):
        cascade_iterate(haar, 13)


def test_common_sample_difference_shrinks(case1_sample):
    # compare consecutive-level grids on their common (coarser) resolution
    def pooled_diff(level):
        fine = cascade_iterate(case1_sample, level + 1, oversample=0)
        coarse = cascade_iterate(case1_sample, level, oversample=0)
        s = fine.samples
        pooled = 0.25 * (s[::2, ::2] + s[1::2, ::2] + s[::2, 1::2] + s[1::2, 1::2])
        diff = pooled - coarse.samples
        return float(np.sqrt((diff ** 2).sum() * coarse.cell_area))

    assert pooled_diff(6) < pooled_diff(5)


def test_autocorrelation_haar_exact(haar):
    corr = autocorrelation(cascade_iterate(haar, 5))
    np.testing.assert_allclose(corr.values, DELTA, atol=1e-12)
    assert corr.delta_deviation() < 1e-12


def test_raw_iterates_always_have_delta_correlation(case1_sample, p3_first):
    # with oversample=0 the grid is the exact piecewise-constant iterate,
    # whose integer shifts are exactly orthonormal for any admissible mask;
    # this is why the limit-faithful oversampled estimate exists at all
    for mask in (case1_sample, p3_first):
        corr = autocorrelation(cascade_iterate(mask, 5, oversample=0))
        assert corr.delta_deviation() < 1e-12


def test_oversampled_correlations_detect_tight_frame(p3_first):
    corr = autocorrelation(cascade_iterate(p3_first, 6, oversample=2))
    assert corr.delta_deviation() > 0.05


def test_oversampled_correlations_near_delta_for_orthonormal(case1_smooth):
    corr = autocorrelation(cascade_iterate(case1_smooth, 6, oversample=2))
    assert corr.delta_deviation() < 0.02


def test_correlation_symmetry(case1_smooth):
    corr = autocorrelation(cascade_iterate(case1_smooth, 5))
    np.testing.assert_allclose(corr.values, corr.values[::-1, ::-1], atol=1e-12)


def test_transfer_consistency_small(case1_smooth, p3_first):
    for mask in (case1_smooth, p3_first):
        grid = cascade_iterate(mask, 6, oversample=2)
        corr = autocorrelation(grid)
        mat = build_lawton_matrix(mask)
        assert transfer_consistency(corr, mat) < 0.05


def test_flatten_uses_lawton_ordering(case1_smooth):
    corr = autocorrelation(cascade_iterate(case1_smooth, 4))
    flat = corr.flatten()
    assert flat.shape == (81,)
    assert flat[40] == corr.values[4, 4]


def test_unit_sum_precondition(haar):
    from bisymwave import FilterMask
    with pytest.raises(ValueError):
        cascade_iterate(FilterMask(haar.coeffs * 2.0), 3)


def test_convergence_deltas_reported(case1_sample):
    grid = cascade_iterate(case1_sample, 4, oversample=1)
    assert len(grid.deltas) == 5
    assert all(d >= 0 for d in grid.deltas)
