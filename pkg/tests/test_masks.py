import math

import numpy as np
import pytest

from bisymwave import (Case1Params, Case2aParams, FilterMask, InvalidBranch,
                       NotSymmetric, WrongSize, case1_mask, case2a_mask,
                       d4_lowpass, d4_tensor_mask, derive_wavelet_bank, embed_mask,
                       haar_mask, polyphase_assemble, polyphase_split,
                       tensor_bank, transpose_mask)
from bisymwave.masks import CASE4A_ALPHA_OFFSET

SQRT2 = math.sqrt(2.0)


# ---------------------------------------------------------------------------
# two-parameter family
# ---------------------------------------------------------------------------

def test_case1_origin_point_is_shifted_haar():
    # beta = gamma = 0 gives alpha = pi/4, p = q = 0: only the four central
    # taps survive, each 1/4
    mask = case1_mask(Case1Params(0.0, 0.0))
    expected = np.zeros((6, 6))
    expected[2:4, 2:4] = 0.25
    np.testing.assert_allclose(mask.coeffs, expected, atol=1e-15)


def test_case1_pi_half_center_taps(case1_sample):
    ab = polyphase_split(case1_sample)
    assert ab.a[4] == pytest.approx(0.125, abs=1e-15)
    assert ab.b[4] == pytest.approx(0.125, abs=1e-15)


def test_case1_unit_sum_random():
    rng = np.random.default_rng(7)
    for _ in range(50):
        beta, gamma = rng.uniform(0, 2 * np.pi, size=2)
        mask = case1_mask(Case1Params(beta, gamma))
        assert abs(mask.sum() - 1.0) < 1e-12


def test_case1_params_derived_values():
    p = Case1Params(np.pi / 2, 0.0)
    assert p.alpha == pytest.approx(np.pi + np.pi / 4)
    assert p.p == pytest.approx(0.125)
    assert p.q == pytest.approx(0.125)


def test_case1_even_sum_circle_closure():
    # the even-index sums a0+a2+a4+a6+a8 and the b analogue lie on the circle
    # centered at (1/8, 1/8) with radius 1/(4 sqrt(2))
    rng = np.random.default_rng(11)
    for _ in range(25):
        beta, gamma = rng.uniform(0, 2 * np.pi, size=2)
        ab = polyphase_split(case1_mask(Case1Params(beta, gamma)))
        x = ab.a[[0, 2, 4, 6, 8]].sum()
        y = ab.b[[0, 2, 4, 6, 8]].sum()
        assert abs((x - 0.125) ** 2 + (y - 0.125) ** 2 - 1.0 / 32.0) < 1e-12


def test_case1_interior_sum_identities():
    # a4 = 3/16 + cos(alpha)/(8 sqrt2) and the companion pair/quad sums
    rng = np.random.default_rng(13)
    for _ in range(25):
        params = Case1Params(*rng.uniform(0, 2 * np.pi, size=2))
        ab = polyphase_split(case1_mask(params))
        ca, sa = math.cos(params.alpha), math.sin(params.alpha)
        assert ab.a[4] == pytest.approx(3 / 16 + ca / (8 * SQRT2), abs=1e-12)
        assert ab.b[4] == pytest.approx(3 / 16 + sa / (8 * SQRT2), abs=1e-12)
        assert ab.a[1] + ab.a[7] == pytest.approx(1 / 16 - ca / (8 * SQRT2), abs=1e-12)
        assert ab.a[3] + ab.a[5] == pytest.approx(1 / 16 - ca / (8 * SQRT2), abs=1e-12)
        assert ab.b[1] + ab.b[7] == pytest.approx(1 / 16 - sa / (8 * SQRT2), abs=1e-12)
        assert (ab.a[[0, 2, 6, 8]].sum()
                == pytest.approx(-1 / 16 + ca / (8 * SQRT2), abs=1e-12))


# ---------------------------------------------------------------------------
# tight-frame family
# ---------------------------------------------------------------------------

P3_FIRST = np.array([
    [0, 1, 1, 1, 1, 0],
    [0, 0, 0, 0, 0, 0],
    [0, -1, 1, 1, -1, 0],
    [0, -1, 1, 1, -1, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 1, 0]]) / 8.0

P3_SECOND = np.array([
    [1, 1, 2, 2, 1, 1],
    [-1, 1, 0, 0, 1, -1],
    [0, -2, 2, 2, -2, 0],
    [0, -2, 2, 2, -2, 0],
    [-1, 1, 0, 0, 1, -1],
    [1, 1, 2, 2, 1, 1]]) / 16.0


def test_case2a_p3_matrices_exact(p3_first, p3_second):
    assert np.abs(p3_first.coeffs - P3_FIRST).max() == 0.0
    assert np.abs(p3_second.coeffs - P3_SECOND).max() == 0.0


def test_case2a_p1_quarter_gamma_plus():
    # at gamma = pi/4 the square root term is exactly 2, making every
    # value a multiple of 1/8
    ab = polyphase_split(case2a_mask(Case2aParams(part=1, gamma=np.pi / 4, sign=+1)))
    e = 0.125
    np.testing.assert_allclose(ab.a, [e, e, 0, 0, 0, 0, -e, e, 0], atol=1e-15)
    np.testing.assert_allclose(ab.b, [0, e, e, 0, 0, 0, 0, e, -e], atol=1e-15)


def test_case2a_p1_all_angles_verify():
    for gamma in np.linspace(0, 2 * np.pi, 17):
        for sign in (+1, -1):
            case2a_mask(Case2aParams(part=1, gamma=gamma, sign=sign))  # self-verifies


def test_case2a_p2_all_angles_verify():
    # alpha = 0 included: the construction is consistent there despite the
    # boundary ambiguity of the branch table
    for alpha in [0.0, 0.1, 0.6, np.pi / 4 + 0.01, 1.5, 3.0, 4.7, 6.0]:
        for sign in (+1, -1):
            mask = case2a_mask(Case2aParams(part=2, alpha=alpha, sign=sign))
            assert abs(mask.sum() - 1.0) < 1e-12


def test_case2a_p2_rejects_quarter_pi():
    with pytest.raises(InvalidBranch):
        Case2aParams(part=2, alpha=np.pi / 4)


def test_case2a_missing_angle_rejected():
    with pytest.raises(InvalidBranch):
        Case2aParams(part=1)
    with pytest.raises(InvalidBranch):
        Case2aParams(part=2)


# ---------------------------------------------------------------------------
# doubly degenerate family
# ---------------------------------------------------------------------------

R1 = np.array([
    [1, 0, 1, 1, 0, 1],
    [0, 0, 0, 0, 0, 0],
    [1, 0, -1, -1, 0, 1],
    [1, 0, -1, -1, 0, 1],
    [0, 0, 0, 0, 0, 0],
    [1, 0, 1, 1, 0, 1]]) / 8.0

R2 = np.array([
    [1, 1, 2, 2, 1, 1],
    [1, -1, 0, 0, -1, 1],
    [2, 0, -2, -2, 0, 2],
    [2, 0, -2, -2, 0, 2],
    [1, -1, 0, 0, -1, 1],
    [1, 1, 2, 2, 1, 1]]) / 16.0

R3 = np.array([
    [1, 0, 1, 1, 0, 1],
    [1, 0, -1, -1, 0, 1],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [1, 0, -1, -1, 0, 1],
    [1, 0, 1, 1, 0, 1]]) / 8.0

R4 = np.array([
    [1, 1, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0],
    [1, -1, 0, 0, -1, 1],
    [1, -1, 0, 0, -1, 1],
    [0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 1, 1]]) / 8.0


def test_case4a_rational_matrices_exact(all_case4a):
    for mask, ref in zip(all_case4a[:4], (R1, R2, R3, R4)):
        assert np.abs(mask.coeffs - ref).max() == 0.0


def test_case4a_irrational_alphas(all_case4a):
    alphas = [dict(m.params)["alpha"] for m in all_case4a[4:]]
    assert alphas[0] == pytest.approx(np.pi / 4 + CASE4A_ALPHA_OFFSET, abs=1e-12)
    assert alphas[1] == pytest.approx((np.pi / 4 - CASE4A_ALPHA_OFFSET) % (2 * np.pi),
                                      abs=1e-12)


def test_case4a_all_unit_sum(all_case4a):
    for mask in all_case4a:
        assert abs(mask.sum() - 1.0) < 1e-12


# ---------------------------------------------------------------------------
# reference filters
# ---------------------------------------------------------------------------

def test_haar_mask(haar):
    np.testing.assert_array_equal(haar.coeffs, np.full((2, 2), 0.25))


def test_d4_taps_against_symbolic_solution():
    # independent oracle: solve the defining system (unit sum, two vanishing
    # moments, double-shift orthogonality) symbolically and compare
    sympy = pytest.importorskip("sympy")
    h = sympy.symbols("h0:4", real=True)
    eqs = [
        h[0] + h[1] + h[2] + h[3] - 1,
        h[0] - h[1] + h[2] - h[3],
        -h[1] + 2 * h[2] - 3 * h[3],
        h[0] * h[2] + h[1] * h[3],
    ]
    sols = sympy.solve(eqs, h, dict=True)
    target = [sol for sol in sols if sympy.simplify(sol[h[0]] - sol[h[3]]) > 0]
    assert len(target) == 1
    expected = np.array([float(target[0][v]) for v in h])
    np.testing.assert_allclose(d4_lowpass(), expected, atol=1e-15)
    closed = np.array([(1 + math.sqrt(3)) / 8, (3 + math.sqrt(3)) / 8,
                       (3 - math.sqrt(3)) / 8, (1 - math.sqrt(3)) / 8])
    np.testing.assert_allclose(d4_lowpass(), closed, atol=1e-16)


def test_d4_tensor_mask_shape_and_sum():
    mask = d4_tensor_mask()
    assert mask.coeffs.shape == (4, 4)
    assert abs(mask.sum() - 1.0) < 1e-14


# ---------------------------------------------------------------------------
# wavelet banks
# ---------------------------------------------------------------------------

def test_haar_wavelet_is_sign_alternated(haar):
    bank = derive_wavelet_bank(haar)
    # first wavelet: m(-x, y), i.e. (1-x)(1+y)/4
    np.testing.assert_allclose(bank.wavelets[0].coeffs,
                               np.array([[0.25, 0.25], [-0.25, -0.25]]), atol=0)


def test_wavelet_entry_rules(case1_sample):
    c = case1_sample.coeffs
    bank = derive_wavelet_bank(case1_sample)
    sx = (-1.0) ** np.arange(6)[:, None]
    sy = (-1.0) ** np.arange(6)[None, :]
    np.testing.assert_array_equal(bank.wavelets[0].coeffs, c * sx)
    np.testing.assert_array_equal(bank.wavelets[1].coeffs[1:], c * sy)
    np.testing.assert_array_equal(bank.wavelets[2].coeffs[1:], c * sx * sy)
    assert np.all(bank.wavelets[1].coeffs[0] == 0)


def test_wavelets_match_symbol_identities(case1_sample):
    # m1(x,y) = m(-x,y); m2(x,y) = x m(x,-y); m3(x,y) = x m(-x,-y)
    bank = derive_wavelet_bank(case1_sample)
    rng = np.random.default_rng(3)
    w1, w2 = rng.uniform(0, 2 * np.pi, size=(2, 8))
    m = lambda f, u, v: f.evaluate(u, v)
    base = case1_sample
    x = np.exp(1j * w1)[:, None]
    np.testing.assert_allclose(m(bank.wavelets[0], w1, w2),
                               m(base, w1 + np.pi, w2), atol=1e-12)
    np.testing.assert_allclose(m(bank.wavelets[1], w1, w2),
                               x * m(base, w1, w2 + np.pi), atol=1e-12)
    np.testing.assert_allclose(m(bank.wavelets[2], w1, w2),
                               x * m(base, w1 + np.pi, w2 + np.pi), atol=1e-12)


def _modulation_residual(bank, n_freq, seed=0):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_freq):
        w1, w2 = rng.uniform(0, 2 * np.pi, size=2)
        m = np.zeros((4, 4), dtype=complex)
        for i, f in enumerate(bank.filters):
            for col, (s1, s2) in enumerate(((0, 0), (np.pi, 0), (0, np.pi), (np.pi, np.pi))):
                m[i, col] = f.evaluate(w1 + s1, w2 + s2)[0, 0]
        worst = max(worst, float(np.abs(m @ m.conj().T - np.eye(4)).max()))
    return worst


def test_modulation_matrix_unitary(case1_sample, p3_first, haar):
    for mask in (haar, case1_sample, p3_first):
        bank = derive_wavelet_bank(mask)
        assert _modulation_residual(bank, 64) < 1e-12


def test_tensor_bank_modulation_unitary():
    bank = tensor_bank(d4_lowpass(), name="d4")
    assert _modulation_residual(bank, 64) < 1e-12


def test_derive_bank_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        derive_wavelet_bank(d4_tensor_mask())


# ---------------------------------------------------------------------------
# polyphase layout
# ---------------------------------------------------------------------------

def test_split_assemble_roundtrip_family(case1_sample, p3_first, all_case4a):
    for mask in [case1_sample, p3_first, *all_case4a]:
        ab = polyphase_split(mask)
        back = polyphase_assemble(ab)
        assert np.abs(back.coeffs - mask.coeffs).max() == 0.0


def test_haar_embedded_center_block_splits():
    grid = np.zeros((6, 6))
    grid[2:4, 2:4] = 0.25
    ab = polyphase_split(FilterMask(grid))
    expected = np.zeros(9)
    expected[4] = 0.25
    np.testing.assert_array_equal(ab.a, expected)
    np.testing.assert_array_equal(ab.b, expected)


def test_split_rejects_nonzero_origin():
    grid = np.zeros((6, 6))
    grid[2:4, 2:4] = 0.25
    with pytest.raises(WrongSize):
        polyphase_split(FilterMask(grid, origin=(2, 2)))


def test_split_rejects_asymmetric_and_wrong_size():
    with pytest.raises(NotSymmetric):
        polyphase_split(FilterMask(np.eye(6) * np.arange(6)))
    with pytest.raises(WrongSize):
        polyphase_split(haar_mask())


# ---------------------------------------------------------------------------
# transpose / embed
# ---------------------------------------------------------------------------

def test_transpose_haar_fixed(haar):
    assert np.array_equal(transpose_mask(haar).coeffs, haar.coeffs)


def test_transpose_involution(case1_sample):
    twice = transpose_mask(transpose_mask(case1_sample))
    assert np.array_equal(twice.coeffs, case1_sample.coeffs)


def test_transposed_case2a_moves_axis_factor(p3_first):
    # the y-restriction of the transpose equals (1 + z^5)/2
    t = transpose_mask(p3_first)
    np.testing.assert_allclose(t.coeffs.sum(axis=0),
                               [0.5, 0, 0, 0, 0, 0.5], atol=1e-15)


def test_embed_mask_bounds(haar):
    embedded = embed_mask(haar, offset=(3, 3), rows=8, cols=8)
    assert embedded.coeffs[3, 3] == 0.25
    with pytest.raises(WrongSize):
        embed_mask(haar, offset=(7, 7), rows=8, cols=8)
