"""Construction of the 6x6 symmetric filter families and derived banks.

The central object is a :class:`FilterMask`: a rectangular grid of refinement
coefficients, ``coeffs[j, k]`` holding the coefficient of ``x^j y^k``. All
family constructors re-derive redundant entries from the linear closure
relations and then hard-verify the full condition system (existence, the 13
orthogonality equations, the 6 moment equations) before returning, so a
returned mask is guaranteed consistent to 1e-10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _equations as eq
from .errors import ConstructionInconsistent, InvalidBranch, NotSymmetric, WrongSize

SQRT2 = math.sqrt(2.0)
TWO_PI = 2.0 * math.pi

#: alpha offsets of the two irrational solitary solutions of the doubly
#: degenerate case: pi/4 +- arccos(17 - 8*sqrt(5)).
CASE4A_ALPHA_OFFSET = math.acos(17.0 - 8.0 * math.sqrt(5.0))

CONSTRUCTION_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class FilterMask:
    """A finite 2-D refinement filter.

    coeffs : grid of real taps, ``coeffs[j, k]`` = coefficient of x^j y^k
             (relative to ``origin``, the grid index of the x^0 y^0 tap).
    """

    coeffs: np.ndarray
    origin: tuple[int, int] = (0, 0)
    name: str = ""
    case: str = ""
    params: tuple[tuple[str, float], ...] = ()

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float)
        if c.ndim != 2 or c.size == 0:
            raise WrongSize("mask coefficients must form a non-empty 2-D grid")
        if not np.isfinite(c).all():
            raise ValueError("mask coefficients must be finite")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "origin", (int(self.origin[0]), int(self.origin[1])))
        object.__setattr__(self, "params", tuple((str(k), float(v)) for k, v in self.params))

    @property
    def rows(self) -> int:
        return self.coeffs.shape[0]

    @property
    def cols(self) -> int:
        return self.coeffs.shape[1]

    @property
    def params_dict(self) -> dict[str, float]:
        return dict(self.params)

    def sum(self) -> float:
        return float(self.coeffs.sum())

    def symmetry_residual(self) -> float:
        """Max deviation from centro-symmetry c[j,k] = c[N-j,M-k]."""
        return eq.symmetry_residual(self.coeffs)

    def is_symmetric(self, tol: float = 1e-12) -> bool:
        return self.symmetry_residual() <= tol

    def evaluate(self, w1, w2) -> np.ndarray:
        """m(e^{i w1}, e^{i w2}) on the tensor grid of the frequency vectors."""
        return eq.evaluate_grid(self.coeffs, w1, w2, self.origin)


@dataclass(frozen=True, eq=False)
class PolyphaseCoeffs:
    """The distinct values of the symmetric layout: 9+9 (6x6) or 16+16 (8x8)."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.array(self.a, dtype=float)
        b = np.array(self.b, dtype=float)
        if a.shape != b.shape or a.ndim != 1 or len(a) not in (9, 16):
            raise WrongSize("polyphase vectors must both have length 9 or 16")
        a.flags.writeable = False
        b.flags.writeable = False
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def size(self) -> int:
        """Side length of the mask this splits: 6 or 8."""
        return 6 if len(self.a) == 9 else 8


@dataclass(frozen=True)
class Case1Params:
    """Parameters of the two-parameter orthonormal family."""

    beta: float
    gamma: float

    @property
    def alpha(self) -> float:
        return 2.0 * (self.beta - self.gamma) + math.pi / 4.0

    @property
    def p(self) -> float:
        return 1.0 / 16.0 - math.cos(self.alpha) / (8.0 * SQRT2)

    @property
    def q(self) -> float:
        return 1.0 / 16.0 - math.sin(self.alpha) / (8.0 * SQRT2)


@dataclass(frozen=True)
class Case2aParams:
    """Parameters of the tight-frame family (parts 1, 2, 3).

    part 1: one free angle ``gamma``; ``sign`` picks the upper/lower row of
            every coupled +-/-+ pair.
    part 2: one free angle ``alpha`` != pi/4; ``sign`` picks which of the two
            gamma(alpha) branches is used.
    part 3: the two solitary solutions; ``sign`` picks the first (+1) or
            second (-1) printed matrix.
    """

    part: int
    gamma: float | None = None
    alpha: float | None = None
    sign: int = +1

    def __post_init__(self):
        if self.part not in (1, 2, 3):
            raise InvalidBranch(f"part must be 1, 2 or 3, got {self.part}")
        if self.sign not in (+1, -1):
            raise InvalidBranch("sign must be +1 or -1")
        if self.part == 1 and self.gamma is None:
            raise InvalidBranch("part 1 requires gamma")
        if self.part == 2:
            if self.alpha is None:
                raise InvalidBranch("part 2 requires alpha")
            if abs(math.remainder(self.alpha - math.pi / 4.0, TWO_PI)) < 1e-12:
                raise InvalidBranch("part 2 excludes alpha = pi/4")

    @property
    def p(self) -> float:
        if self.part != 2:
            raise InvalidBranch("p is defined for part 2 only")
        return -1.0 / 16.0 - math.cos(self.alpha) / (8.0 * SQRT2)

    @property
    def q(self) -> float:
        if self.part != 2:
            raise InvalidBranch("q is defined for part 2 only")
        return -1.0 / 16.0 - math.sin(self.alpha) / (8.0 * SQRT2)

    @property
    def s(self) -> float:
        return math.sqrt(32.0 * (self.p ** 2 + self.q ** 2))

    @property
    def t(self) -> float:
        return math.hypot(self.p + 0.125, self.q + 0.125)

    @property
    def gamma_resolved(self) -> float:
        """The angle actually used: part 1's gamma, or part 2's branch value."""
        if self.part == 1:
            return _mod_2pi(self.gamma)
        if self.part == 3:
            raise InvalidBranch("part 3 has no free angle")
        alpha = _mod_2pi(self.alpha)
        if alpha < math.pi / 4.0:
            g = -alpha / 2.0 + 7.0 * math.pi / 8.0 if self.sign > 0 else alpha / 2.0 - 3.0 * math.pi / 8.0
        else:
            g = alpha / 2.0 + 5.0 * math.pi / 8.0 if self.sign > 0 else -alpha / 2.0 - math.pi / 8.0
        return _mod_2pi(g)


@dataclass(frozen=True, eq=False)
class WaveletBank:
    """A scaling mask with its three wavelet masks."""

    scaling: FilterMask
    wavelets: tuple[FilterMask, FilterMask, FilterMask]
    name: str = ""

    @property
    def filters(self) -> tuple[FilterMask, ...]:
        return (self.scaling,) + tuple(self.wavelets)


def _mod_2pi(x: float) -> float:
    return float(x) % TWO_PI


# ---------------------------------------------------------------------------
# polyphase layout
# ---------------------------------------------------------------------------

def polyphase_assemble(coeffs: PolyphaseCoeffs, **mask_kw) -> FilterMask:
    """Rebuild the full grid from the distinct layout values.

    Even rows hold the a/b values interleaved; odd rows are the
    centro-symmetric mirrors, which is exactly the printed symmetric layout.
    """
    t = 3 if coeffs.size == 6 else 4
    side = 2 * t
    g = np.zeros((side, side))
    for i in range(t * t):
        r, c = 2 * (i // t), 2 * (i % t)
        g[r, c] = coeffs.a[i]
        g[r, c + 1] = coeffs.b[i]
    for r in range(1, side, 2):
        g[r] = g[side - 1 - r, ::-1]
    return FilterMask(g, **mask_kw)


def polyphase_split(mask: FilterMask, tol: float = 1e-12) -> PolyphaseCoeffs:
    """Extract the distinct layout values of a symmetric 6x6 or 8x8 mask."""
    if mask.origin != (0, 0):
        raise WrongSize(
            f"polyphase layout is defined on absolute powers; origin {mask.origin} "
            "shifts grid indices off the layout parity")
    if mask.coeffs.shape not in ((6, 6), (8, 8)):
        raise WrongSize(f"expected a 6x6 or 8x8 grid, got {mask.coeffs.shape}")
    res = mask.symmetry_residual()
    if res > tol:
        raise NotSymmetric(f"centro-symmetry residual {res:.3g} exceeds {tol:.3g}")
    t = mask.rows // 2
    a = np.array([mask.coeffs[2 * (i // t), 2 * (i % t)] for i in range(t * t)])
    b = np.array([mask.coeffs[2 * (i // t), 2 * (i % t) + 1] for i in range(t * t)])
    return PolyphaseCoeffs(a, b)


def transpose_mask(mask: FilterMask) -> FilterMask:
    """Swap the roles of the two variables (grid transpose)."""
    return FilterMask(mask.coeffs.T, origin=(mask.origin[1], mask.origin[0]),
                      name=mask.name + "-transposed" if mask.name else "",
                      case=mask.case, params=mask.params)


def embed_mask(mask: FilterMask, offset: tuple[int, int] = (1, 1),
               rows: int = 8, cols: int = 8) -> FilterMask:
    """Zero-pad a mask into a larger grid at the given index offset."""
    r0, c0 = offset
    if r0 < 0 or c0 < 0 or r0 + mask.rows > rows or c0 + mask.cols > cols:
        raise WrongSize("embedded mask does not fit the target grid")
    g = np.zeros((rows, cols))
    g[r0:r0 + mask.rows, c0:c0 + mask.cols] = mask.coeffs
    return FilterMask(g, name=mask.name + "-embedded" if mask.name else "",
                      case=mask.case, params=mask.params)


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

def _finish(a, b, *, name, case, params) -> FilterMask:
    """Assemble and hard-verify a family construction."""
    mask = polyphase_assemble(PolyphaseCoeffs(a, b), name=name, case=case, params=params)
    worst = max(
        eq.existence_residual(mask.coeffs),
        float(eq.orthogonality_residuals_66(np.asarray(a, float), np.asarray(b, float)).max()),
        float(eq.moment_residuals_66(np.asarray(a, float), np.asarray(b, float)).max()),
    )
    if worst > CONSTRUCTION_TOL:
        raise ConstructionInconsistent(
            f"{name or case}: condition-system residual {worst:.3g} exceeds {CONSTRUCTION_TOL:g}")
    return mask


def case1_mask(params: Case1Params) -> FilterMask:
    """Member of the two-parameter orthonormal family.

    The interior values follow the closed forms in (beta, gamma); the four
    grid corners of each polyphase vector are completed through the linear
    closure relations (each row/column triple of a-values sums to 0 off the
    center), which sidesteps the transcription ambiguities in the printed
    corner formulas. The result is self-verified before being returned.
    """
    beta, gamma = _mod_2pi(params.beta), _mod_2pi(params.gamma)
    alpha = 2.0 * (beta - gamma) + math.pi / 4.0
    p = 1.0 / 16.0 - math.cos(alpha) / (8.0 * SQRT2)
    q = 1.0 / 16.0 - math.sin(alpha) / (8.0 * SQRT2)
    s = math.hypot(p, q)
    d = beta - gamma
    cb, sb = math.cos(beta), math.sin(beta)
    cg, sg = math.cos(gamma), math.sin(gamma)

    a = np.zeros(9)
    b = np.zeros(9)
    a[1] = p / 2.0 + s * cb / 2.0
    a[7] = p / 2.0 - s * cb / 2.0
    a[3] = p / 2.0 + s * cg / 2.0
    a[5] = p / 2.0 - s * cg / 2.0
    b[1] = q / 2.0 + s * sb / 2.0
    b[7] = q / 2.0 - s * sb / 2.0
    b[3] = q / 2.0 + s * sg / 2.0
    b[5] = q / 2.0 - s * sg / 2.0
    a[4] = 0.25 - p
    b[4] = 0.25 - q
    a[0] = (-p * (1.0 + math.cos(d)) - q * math.sin(d) - s * (cb + cg)) / 4.0
    b[0] = (-q * (1.0 + math.cos(d)) + p * math.sin(d) - s * (sb + sg)) / 4.0
    a[2] = -a[0] - a[1]
    a[6] = -a[0] - a[3]
    a[8] = -a[6] - a[7]
    b[2] = -b[0] - b[1]
    b[6] = -b[0] - b[3]
    b[8] = -b[6] - b[7]
    return _finish(a, b, name=f"case1(beta={beta:.6g},gamma={gamma:.6g})",
                   case="case1", params=(("beta", beta), ("gamma", gamma)))


def _case2a_part1(gamma: float, sign: int):
    cg, sg = math.cos(gamma), math.sin(gamma)
    # the radicand reaches exactly 0 at gamma = 5 pi/4; clamp rounding dust
    root = math.sqrt(max(0.0, 2.0 + SQRT2 * (cg + sg)))
    a = np.zeros(9)
    b = np.zeros(9)
    a[1] = 3.0 / 16.0 - cg / (8.0 * SQRT2)
    a[7] = 1.0 / 16.0 + cg / (8.0 * SQRT2)
    b[1] = 3.0 / 16.0 - sg / (8.0 * SQRT2)
    b[7] = 1.0 / 16.0 + sg / (8.0 * SQRT2)
    a[0] = (1.0 + SQRT2 * cg + sign * root) / 32.0
    a[2] = (1.0 + SQRT2 * cg - sign * root) / 32.0
    a[6] = (-1.0 - SQRT2 * cg - sign * root) / 32.0
    a[8] = (-1.0 - SQRT2 * cg + sign * root) / 32.0
    b[0] = (1.0 + SQRT2 * sg - sign * root) / 32.0
    b[2] = (1.0 + SQRT2 * sg + sign * root) / 32.0
    b[6] = (-1.0 - SQRT2 * sg + sign * root) / 32.0
    b[8] = (-1.0 - SQRT2 * sg - sign * root) / 32.0
    return a, b


def _case2a_part2(alpha: float, gamma: float):
    p = -1.0 / 16.0 - math.cos(alpha) / (8.0 * SQRT2)
    q = -1.0 / 16.0 - math.sin(alpha) / (8.0 * SQRT2)
    s = math.sqrt(32.0 * (p * p + q * q))
    t = math.hypot(p + 0.125, q + 0.125)
    cg, sg = math.cos(gamma), math.sin(gamma)
    a = np.zeros(9)
    b = np.zeros(9)
    a[4], b[4] = -p, -q
    a[3], b[3] = (8.0 * p + s) / 16.0, (8.0 * q - s) / 16.0
    a[5], b[5] = (8.0 * p - s) / 16.0, (8.0 * q + s) / 16.0
    a[1] = (3.0 + 8.0 * p - 8.0 * t * cg) / 16.0
    b[1] = (3.0 + 8.0 * q - 8.0 * t * sg) / 16.0
    a[7] = (1.0 + 8.0 * p + 8.0 * t * cg) / 16.0
    b[7] = (1.0 + 8.0 * q + 8.0 * t * sg) / 16.0
    # corners: printed a8/b8 pin the one remaining degree of freedom, the
    # rest follows from the linear closure of this branch
    r = t / (p - q)
    a[8] = (-1.0 - 8.0 * p + s + r * ((s - 8.0 * p + 8.0 * q) * cg - s * sg)) / 32.0
    b[8] = -(1.0 + 8.0 * q + s + r * ((-s + 8.0 * p - 8.0 * q) * sg + s * cg)) / 32.0
    a[6] = -a[7] - a[8]
    a[2] = -a[5] - a[8]
    a[0] = 0.25 - a[1] - a[2]
    b[6] = -b[7] - b[8]
    b[2] = -b[5] - b[8]
    b[0] = 0.25 - b[1] - b[2]
    return a, b


_CASE2A_PART3_FIRST = np.array([
    [0, 1, 1, 1, 1, 0],
    [0, 0, 0, 0, 0, 0],
    [0, -1, 1, 1, -1, 0],
    [0, -1, 1, 1, -1, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 1, 0]], dtype=float) / 8.0

_CASE2A_PART3_SECOND = np.array([
    [1, 1, 2, 2, 1, 1],
    [-1, 1, 0, 0, 1, -1],
    [0, -2, 2, 2, -2, 0],
    [0, -2, 2, 2, -2, 0],
    [-1, 1, 0, 0, 1, -1],
    [1, 1, 2, 2, 1, 1]], dtype=float) / 16.0


def case2a_mask(params: Case2aParams) -> FilterMask:
    """Member of the tight-frame family (not orthonormal; still condition-(ii) exact)."""
    if params.part == 1:
        gamma = params.gamma_resolved
        a, b = _case2a_part1(gamma, params.sign)
        return _finish(a, b, name=f"case2a-p1(gamma={gamma:.6g},{params.sign:+d})",
                       case="case2a", params=(("part", 1), ("gamma", gamma), ("sign", params.sign)))
    if params.part == 2:
        alpha = _mod_2pi(params.alpha)
        gamma = params.gamma_resolved
        a, b = _case2a_part2(alpha, gamma)
        return _finish(a, b, name=f"case2a-p2(alpha={alpha:.6g},{params.sign:+d})",
                       case="case2a", params=(("part", 2), ("alpha", alpha), ("sign", params.sign)))
    grid = _CASE2A_PART3_FIRST if params.sign > 0 else _CASE2A_PART3_SECOND
    mask = FilterMask(grid, name=f"case2a-p3({'first' if params.sign > 0 else 'second'})",
                      case="case2a", params=(("part", 3), ("sign", params.sign)))
    _verify_grid(mask)
    return mask


_CASE4A_RATIONAL = (
    np.array([
        [1, 0, 1, 1, 0, 1],
        [0, 0, 0, 0, 0, 0],
        [1, 0, -1, -1, 0, 1],
        [1, 0, -1, -1, 0, 1],
        [0, 0, 0, 0, 0, 0],
        [1, 0, 1, 1, 0, 1]], dtype=float) / 8.0,
    np.array([
        [1, 1, 2, 2, 1, 1],
        [1, -1, 0, 0, -1, 1],
        [2, 0, -2, -2, 0, 2],
        [2, 0, -2, -2, 0, 2],
        [1, -1, 0, 0, -1, 1],
        [1, 1, 2, 2, 1, 1]], dtype=float) / 16.0,
    np.array([
        [1, 0, 1, 1, 0, 1],
        [1, 0, -1, -1, 0, 1],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [1, 0, -1, -1, 0, 1],
        [1, 0, 1, 1, 0, 1]], dtype=float) / 8.0,
    np.array([
        [1, 1, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 0],
        [1, -1, 0, 0, -1, 1],
        [1, -1, 0, 0, -1, 1],
        [0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 1, 1]], dtype=float) / 8.0,
)


def _case4a_irrational(alpha: float) -> FilterMask:
    """Solitary solution on the beta = gamma = -3pi/4 branch for the given alpha.

    The two corner unknowns a8, b8 solve a 2x2 linear system formed by the
    branch's surviving equations; everything else follows from the linear
    closure. Verified against the full system afterwards.
    """
    a4 = -1.0 / 16.0 + math.cos(alpha) / (8.0 * SQRT2)
    b4 = -1.0 / 16.0 + math.sin(alpha) / (8.0 * SQRT2)
    p, q = -a4, -b4
    k = math.sqrt(max(0.0, 1.0 + math.sin(alpha + math.pi / 4.0)))
    edge = p / 2.0 - 1.0 / 16.0 - SQRT2 * k / 32.0
    edgeq = q / 2.0 - 1.0 / 16.0 - SQRT2 * k / 32.0
    a = np.zeros(9)
    b = np.zeros(9)
    a[4], b[4] = a4, b4
    a[7] = a[5] = edge
    b[7] = b[3] = edgeq
    a[1] = p - a[7]
    a[3] = p - a[5]
    b[1] = q - b[7]
    b[5] = q - b[3]
    m = np.array([[1.0, 1.0], [p - 0.25, q - 0.25]])
    rhs = np.array([-(a[7] + b[7]) / 2.0, b[7] / 4.0 - a[5] * a[7] - b[5] * b[7]])
    a[8], b[8] = np.linalg.solve(m, rhs)
    a[6] = -a[7] - a[8]
    a[2] = -a[5] - a[8]
    a[0] = 0.25 - a[1] - a[2]
    b[6] = -b[7] - b[8]
    b[2] = 0.25 - b[5] - b[8]
    b[0] = -b[1] + b[5] + b[8]
    return _finish(a, b, name=f"case4a(alpha={alpha:.6g})", case="case4a",
                   params=(("alpha", _mod_2pi(alpha)),))


def case4a_masks() -> list[FilterMask]:
    """All six solitary solutions of the doubly degenerate case.

    The first four are the exact dyadic-rational grids as printed; the last
    two have alpha = pi/4 +- arccos(17 - 8*sqrt(5)) and are computed
    numerically on their branch.
    """
    out = []
    for i, g in enumerate(_CASE4A_RATIONAL):
        mask = FilterMask(g, name=f"case4a-r{i}", case="case4a", params=(("index", i),))
        _verify_grid(mask)
        out.append(mask)
    out.append(_case4a_irrational(math.pi / 4.0 + CASE4A_ALPHA_OFFSET))
    out.append(_case4a_irrational(math.pi / 4.0 - CASE4A_ALPHA_OFFSET))
    return out


def _verify_grid(mask: FilterMask) -> None:
    ab = polyphase_split(mask)
    worst = max(
        eq.existence_residual(mask.coeffs),
        float(eq.orthogonality_residuals_66(ab.a, ab.b).max()),
        float(eq.moment_residuals_66(ab.a, ab.b).max()),
    )
    if worst > CONSTRUCTION_TOL:
        raise ConstructionInconsistent(
            f"{mask.name}: condition-system residual {worst:.3g} exceeds {CONSTRUCTION_TOL:g}")


# ---------------------------------------------------------------------------
# reference filters
# ---------------------------------------------------------------------------

def haar_mask() -> FilterMask:
    """The 2x2 tensor Haar mask (all taps 1/4)."""
    return FilterMask(np.full((2, 2), 0.25), name="haar", case="haar")


def d4_lowpass() -> np.ndarray:
    """Length-4 orthonormal lowpass with two vanishing moments, sum 1."""
    s3 = math.sqrt(3.0)
    return np.array([(1.0 + s3) / 8.0, (3.0 + s3) / 8.0, (3.0 - s3) / 8.0, (1.0 - s3) / 8.0])


def d4_tensor_mask() -> FilterMask:
    """Separable 4x4 mask: outer product of the 4-tap lowpass with itself."""
    h = d4_lowpass()
    return FilterMask(np.outer(h, h), name="d4-tensor", case="d4")


# ---------------------------------------------------------------------------
# wavelet banks
# ---------------------------------------------------------------------------

def derive_wavelet_bank(scaling: FilterMask, tol: float = 1e-10) -> WaveletBank:
    """Wavelet masks of a centro-symmetric scaling mask.

    m1(x,y) = m(-x,y), m2(x,y) = x m(x,-y), m3(x,y) = x m(-x,-y): sign flips
    of the grid plus a one-row shift for the factor x. Centro-symmetry with
    odd degree is what makes the resulting 4x4 modulation matrix unitary, so
    it is a hard precondition.
    """
    res = scaling.symmetry_residual()
    if res > tol:
        raise NotSymmetric(
            f"wavelet recipes need a centro-symmetric mask (residual {res:.3g})")
    c = scaling.coeffs
    nr, nc = c.shape
    sx = (-1.0) ** np.arange(nr)[:, None]
    sy = (-1.0) ** np.arange(nc)[None, :]
    m1 = c * sx
    m2 = np.zeros((nr + 1, nc))
    m2[1:] = c * sy
    m3 = np.zeros((nr + 1, nc))
    m3[1:] = c * sx * sy
    nm = scaling.name or "mask"
    wavelets = tuple(
        FilterMask(g, name=f"{nm}-w{i + 1}", case=scaling.case)
        for i, g in enumerate((m1, m2, m3))
    )
    return WaveletBank(scaling, wavelets, name=nm)


def tensor_bank(lowpass: np.ndarray, name: str = "tensor") -> WaveletBank:
    """Separable bank from a univariate orthonormal lowpass (sum 1).

    The highpass is the usual alternating-flip mirror g_k = (-1)^k h_{L-1-k}.
    """
    h = np.asarray(lowpass, dtype=float)
    if h.ndim != 1 or len(h) % 2:
        raise WrongSize("univariate lowpass must be 1-D with even length")
    g = ((-1.0) ** np.arange(len(h))) * h[::-1]
    scaling = FilterMask(np.outer(h, h), name=name, case="tensor")
    wavelets = (
        FilterMask(np.outer(g, h), name=f"{name}-w1"),
        FilterMask(np.outer(h, g), name=f"{name}-w2"),
        FilterMask(np.outer(g, g), name=f"{name}-w3"),
    )
    return WaveletBank(scaling, wavelets, name=name)


def bank_for_mask(mask: FilterMask) -> WaveletBank:
    """Pick the natural bank construction for a scaling mask.

    Centro-symmetric masks use the sign-flip recipes; non-symmetric masks
    that factor as an outer product (separable filters such as the 4-tap
    tensor) fall back to the separable bank. Anything else has no supported
    wavelet construction here.
    """
    if mask.is_symmetric(1e-10):
        return derive_wavelet_bank(mask)
    c = mask.coeffs
    if c.shape[0] == c.shape[1]:
        u, s, vt = np.linalg.svd(c)
        if s[0] > 0 and (len(s) == 1 or s[1] <= 1e-12 * s[0]):
            f = u[:, 0] * math.sqrt(s[0])
            gfac = vt[0] * math.sqrt(s[0])
            if f.sum() < 0:
                f, gfac = -f, -gfac
            if np.allclose(f, gfac, atol=1e-12) and len(f) % 2 == 0:
                return tensor_bank(f, name=mask.name or "separable")
    raise NotSymmetric(
        "mask is neither centro-symmetric nor a separable outer product; "
        "no wavelet bank construction applies")
