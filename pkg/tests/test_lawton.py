import numpy as np
import pytest

from bisymwave import (Case1Params, Case2aParams, FilterMask, SupportTooLarge,
                       axis_cycle_check, axis_restriction, build_lawton_matrix,
                       case1_mask, case2a_mask, d4_tensor_mask, doubling_cycles,
                       unit_eigenvalue_multiplicity)
from bisymwave.lawton import flat_index, shift_of


def test_index_ordering_bijection():
    seen = set()
    for l1 in range(-4, 5):
        for l2 in range(-4, 5):
            idx = flat_index(l1, l2)
            assert 0 <= idx < 81
            assert shift_of(idx) == (l1, l2)
            seen.add(idx)
    assert len(seen) == 81
    assert flat_index(0, 0) == 40


def test_dimension_and_support_guard(haar, case1_sample):
    assert build_lawton_matrix(haar).entries.shape == (81, 81)
    assert build_lawton_matrix(case1_sample).entries.shape == (81, 81)
    with pytest.raises(SupportTooLarge):
        build_lawton_matrix(FilterMask(np.full((8, 8), 1 / 64)))


def test_delta_is_fixed_vector(haar, case1_sample, p3_first, all_case4a):
    for mask in (haar, case1_sample, p3_first, *all_case4a):
        mat = build_lawton_matrix(mask)
        delta = mat.delta_vector()
        assert np.abs(mat.entries @ delta - delta).max() < 1e-12


def test_haar_column_sums_are_one(haar):
    mat = build_lawton_matrix(haar)
    np.testing.assert_allclose(mat.entries.sum(axis=0), np.ones(81), atol=1e-14)


def test_haar_spectrum_simple_unit(haar):
    rep = unit_eigenvalue_multiplicity(build_lawton_matrix(haar))
    assert rep.unit_multiplicity == 1
    assert rep.verdict == "orthonormal"
    assert rep.spectral_gap > 0.4
    # geometric-multiplicity cross-check: rank deficiency of (A - I) is 1
    s = np.linalg.svd(build_lawton_matrix(haar).entries - np.eye(81), compute_uv=False)
    assert np.sum(s < 1e-10) == 1


def test_case1_sample_orthonormal(case1_sample):
    rep = unit_eigenvalue_multiplicity(build_lawton_matrix(case1_sample))
    assert rep.unit_multiplicity == 1
    assert rep.verdict == "orthonormal"


def test_case2a_and_case4a_degenerate(p3_first, p3_second, all_case4a):
    for mask in (p3_first, p3_second, *all_case4a):
        rep = unit_eigenvalue_multiplicity(build_lawton_matrix(mask))
        assert rep.unit_multiplicity >= 2
        assert rep.verdict == "degenerate"
    # null-space cross-check on one degenerate instance
    s = np.linalg.svd(build_lawton_matrix(p3_first).entries - np.eye(81),
                      compute_uv=False)
    assert np.sum(s < 1e-10) >= 2


def test_spectral_radius_reported(case1_sample, p3_first):
    # reported, not asserted as a theorem: no eigenvalue should exceed
    # modulus 1 beyond rounding for these masks
    for mask in (case1_sample, p3_first):
        rep = unit_eigenvalue_multiplicity(build_lawton_matrix(mask))
        assert rep.max_other_modulus <= 1.0 + 1e-8


def test_spectrum_determinism(case1_sample):
    mat = build_lawton_matrix(case1_sample)
    r1 = unit_eigenvalue_multiplicity(mat)
    r2 = unit_eigenvalue_multiplicity(mat)
    assert np.array_equal(r1.eigenvalues, r2.eigenvalues)


# ---------------------------------------------------------------------------
# axis restrictions and cycles
# ---------------------------------------------------------------------------

def test_doubling_cycle_enumeration():
    cycles = doubling_cycles(5)
    assert (3, (1, 2)) in cycles
    assert (5, (1, 2, 4, 3)) in cycles
    # no even denominators, no trivial fixed point
    assert all(d % 2 == 1 for d, _ in cycles)


def test_case2a_sum_rule(p3_first):
    # restriction to the first axis is (1 + z^5)/2
    for gamma in (0.3, np.pi / 4, 2.0):
        mask = case2a_mask(Case2aParams(part=1, gamma=gamma))
        coeff = axis_restriction(mask, "x")
        np.testing.assert_allclose(coeff, [0.5, 0, 0, 0, 0, 0.5], atol=1e-12)
    w = 2 * np.pi * np.arange(64) / 64
    vals = np.polynomial.polynomial.polyval(np.exp(1j * w), axis_restriction(p3_first, "x"))
    np.testing.assert_allclose(vals, (1 + np.exp(5j * w)) / 2, atol=1e-12)


def test_case2a_fifth_root_cycle():
    mask = case2a_mask(Case2aParams(part=1, gamma=np.pi / 4, sign=+1))
    cycles = axis_cycle_check(mask, max_denominator=64)
    fifth = [c for c in cycles if c.denominator == 5 and c.axis == "x"]
    assert len(fifth) == 1
    assert sorted(fifth[0].numerators) == [1, 2, 3, 4]
    expected = {2 * np.pi / 5, 4 * np.pi / 5, 6 * np.pi / 5, 8 * np.pi / 5}
    assert set(np.round(fifth[0].points, 12)) == set(np.round(sorted(expected), 12))


def test_haar_and_case1_have_no_cycles(haar, case1_sample):
    assert axis_cycle_check(haar, max_denominator=64) == []
    assert axis_cycle_check(case1_sample, max_denominator=64) == []


def test_cycles_imply_degenerate_spectrum(p3_first, p3_second, all_case4a):
    masks = [p3_first, p3_second, *all_case4a]
    for gamma in np.linspace(0.1, 5.9, 5):
        masks.append(case2a_mask(Case2aParams(part=1, gamma=gamma)))
    for mask in masks:
        if axis_cycle_check(mask, max_denominator=16):
            rep = unit_eigenvalue_multiplicity(build_lawton_matrix(mask))
            assert rep.verdict == "degenerate"


def test_d4_tensor_spectrum_orthonormal():
    rep = unit_eigenvalue_multiplicity(build_lawton_matrix(d4_tensor_mask()))
    assert rep.unit_multiplicity == 1
    assert rep.verdict == "orthonormal"


def test_cycle_check_rejects_small_denominator(haar):
    with pytest.raises(ValueError):
        axis_cycle_check(haar, max_denominator=2)
