"""Command-line interface.

Exit codes: 0 = pass, 1 = verification failure (a check ran and failed),
2 = usage or I/O error.
"""

from __future__ import annotations

import argparse
import re
import sys

import numpy as np

from . import io as bio
from .cascade import autocorrelation, cascade_iterate, transfer_consistency
from .dwt import SubbandSet, analyze, compare_filters, energy_compaction, synthesize
from .errors import (BisymwaveError, ConstructionInconsistent, InvalidBranch,
                     LemmaViolated, LevelsOutOfRange, NotSymmetric, OddDimensions,
                     ParseError, SupportTooLarge, WrongSize)
from .lawton import axis_cycle_check, build_lawton_matrix, unit_eigenvalue_multiplicity
from .masks import (Case1Params, Case2aParams, bank_for_mask, case1_mask,
                    case2a_mask, case4a_masks, d4_tensor_mask, haar_mask)
from .moments8 import check_moment_equations8, check_qmf8, polyphase8_split, solve_moment_sums
from .scan import SCAN_HEADER, scan_case1
from .verify import verify_mask

_PI_RE = re.compile(r"^([+-]?\d*\.?\d*)\*?pi(?:/(\d*\.?\d+))?$", re.IGNORECASE)


def parse_angle(text: str) -> float:
    """Radians, with pi-multiple syntax: 'pi', 'pi/4', '-3pi/4', '0.5pi', '2*pi/5'."""
    s = text.strip().replace(" ", "")
    m = _PI_RE.match(s)
    if m:
        coeff = m.group(1)
        if coeff in ("", "+"):
            num = 1.0
        elif coeff == "-":
            num = -1.0
        else:
            num = float(coeff)
        den = float(m.group(2)) if m.group(2) else 1.0
        return num * np.pi / den
    try:
        return float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse angle {text!r}") from None


def _sign(text: str) -> int:
    t = text.strip().lower()
    if t in ("plus", "+", "+1"):
        return +1
    if t in ("minus", "-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be plus or minus, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bisymwave",
                                 description="6x6 bivariate symmetric wavelet filter toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct a filter mask and write it to a file")
    gen.add_argument("--case", required=True,
                     choices=["case1", "case2a", "case4a", "haar", "d4"])
    gen.add_argument("--beta", type=parse_angle)
    gen.add_argument("--gamma", type=parse_angle)
    gen.add_argument("--alpha", type=parse_angle)
    gen.add_argument("--part", type=int, choices=[1, 2, 3])
    gen.add_argument("--sign", type=_sign, default=+1)
    gen.add_argument("--index", type=int, default=0, help="solution index for case4a (0..5)")
    gen.add_argument("-o", "--output", required=True)

    ver = sub.add_parser("verify", help="run all residual checks on a mask file")
    ver.add_argument("mask")
    ver.add_argument("--tol", type=float, default=1e-10)

    law = sub.add_parser("lawton", help="transfer-matrix spectrum test")
    law.add_argument("mask")
    law.add_argument("--tol", type=float, default=1e-8)

    cyc = sub.add_parser("cycles", help="axis cycle obstruction search")
    cyc.add_argument("mask")
    cyc.add_argument("--max-den", type=int, default=64)

    cas = sub.add_parser("cascade", help="refinement iteration; export the sample grid")
    cas.add_argument("mask")
    cas.add_argument("--levels", type=int, required=True)
    cas.add_argument("--oversample", type=int, default=2)
    cas.add_argument("-o", "--output", required=True)

    dw = sub.add_parser("dwt", help="one-level image analysis to subband CSVs")
    dw.add_argument("--mask", required=True)
    dw.add_argument("--image", required=True)
    dw.add_argument("--out-prefix", required=True)

    idw = sub.add_parser("idwt", help="synthesize an image from subband CSVs")
    idw.add_argument("--mask", required=True)
    idw.add_argument("--in-prefix", required=True)
    idw.add_argument("--out", required=True)
    idw.add_argument("--maxval", type=int, default=255)

    cmp_ = sub.add_parser("compare", help="energy compaction across several masks")
    cmp_.add_argument("--image", required=True)
    cmp_.add_argument("--masks", nargs="+", required=True)

    sc = sub.add_parser("scan", help="sweep the two-parameter family to CSV")
    sc.add_argument("--grid", type=int, required=True)
    sc.add_argument("--level", type=int, default=4, help="cascade level per grid point")
    sc.add_argument("-o", "--output", required=True)

    m8 = sub.add_parser("moments8", help="8x8 necessary-condition checks")
    m8.add_argument("--mask", required=True)
    return ap


def _generate(args) -> tuple:
    if args.case == "case1":
        if args.beta is None or args.gamma is None:
            raise InvalidBranch("case1 requires --beta and --gamma")
        return case1_mask(Case1Params(args.beta, args.gamma)),
    if args.case == "case2a":
        part = args.part if args.part is not None else (1 if args.gamma is not None else 2)
        return case2a_mask(Case2aParams(part=part, gamma=args.gamma,
                                        alpha=args.alpha, sign=args.sign)),
    if args.case == "case4a":
        masks = case4a_masks()
        if not 0 <= args.index < len(masks):
            raise InvalidBranch(f"--index must be in 0..{len(masks) - 1}")
        return masks[args.index],
    if args.case == "haar":
        return haar_mask(),
    return d4_tensor_mask(),


def cmd_gen(args) -> int:
    mask, = _generate(args)
    bio.write_mask(args.output, mask)
    print(f"wrote {mask.name or args.case}: {mask.rows}x{mask.cols} mask -> {args.output}")
    return 0


def cmd_verify(args) -> int:
    mask = bio.read_mask(args.mask)
    rep = verify_mask(mask, tol=args.tol)

    def line(label, residual, ok):
        status = "PASS" if ok else ("----" if ok is None else "FAIL")
        print(f"{status}  {label:<22} {residual:.3e}")

    line("existence", rep.existence_residual, rep.existence_pass)
    if rep.symmetry_residual is not None:
        line("symmetry", rep.symmetry_residual, rep.symmetry_pass)
    if rep.orthogonality_residuals is not None:
        line("orthogonality (13)", float(rep.orthogonality_residuals.max()), rep.orthogonality_pass)
        line("moments (6)", float(rep.moment_residuals.max()), rep.moment_pass)
    line("qmf grid", rep.qmf_grid_max_residual, rep.qmf_pass)
    print(f"overall: {'PASS' if rep.overall_pass else 'FAIL'} (tol {args.tol:g})")
    return 0 if rep.overall_pass else 1


def cmd_lawton(args) -> int:
    mask = bio.read_mask(args.mask)
    rep = unit_eigenvalue_multiplicity(build_lawton_matrix(mask), tol=args.tol)
    print(f"unit multiplicity: {rep.unit_multiplicity}")
    print(f"spectral gap:      {rep.spectral_gap:.6e}")
    print(f"max other modulus: {rep.max_other_modulus:.6f}")
    print(f"verdict:           {rep.verdict}")
    return 0 if rep.verdict == "orthonormal" else 1


def cmd_cycles(args) -> int:
    mask = bio.read_mask(args.mask)
    cycles = axis_cycle_check(mask, max_denominator=args.max_den)
    if not cycles:
        print(f"no axis cycles up to denominator {args.max_den}")
        return 0
    for c in cycles:
        pts = ", ".join(f"2pi*{k}/{c.denominator}" for k in c.numerators)
        print(f"{c.axis}-axis cycle (denominator {c.denominator}): {pts}")
    return 1


def cmd_cascade(args) -> int:
    mask = bio.read_mask(args.mask)
    grid = cascade_iterate(mask, args.levels, args.oversample)
    bio.write_csv_matrix(args.output, grid.samples)
    print(f"level {grid.level} grid ({grid.samples.shape[0]}x{grid.samples.shape[1]} cells), "
          f"oversample {grid.oversample}, riemann sum {grid.riemann_sum():.12f}")
    print("iteration deltas: " + " ".join(f"{d:.3e}" for d in grid.deltas))
    corr = autocorrelation(grid)
    a_mat = build_lawton_matrix(mask) if mask.rows <= 6 and mask.cols <= 6 else None
    print(f"max |corr - delta|: {corr.delta_deviation():.6e}")
    if a_mat is not None:
        print(f"transfer consistency |a - Aa|: {transfer_consistency(corr, a_mat):.6e}")
    return 0


def _load_bank(path):
    return bank_for_mask(bio.read_mask(path))


def cmd_dwt(args) -> int:
    bank = _load_bank(args.mask)
    pixels, _ = bio.read_pgm(args.image)
    subbands = analyze(pixels, bank)
    for name, band in zip(("approx", "detail1", "detail2", "detail3"), subbands.bands):
        bio.write_csv_matrix(f"{args.out_prefix}_{name}.csv", band)
    rep = energy_compaction(subbands)
    fr = " ".join(f"{f:.6f}" for f in rep.fractions)
    print(f"subband energy fractions: {fr}")
    print(f"coefficients for 99% energy: {rep.coeffs_for_99}")
    return 0


def cmd_idwt(args) -> int:
    bank = _load_bank(args.mask)
    bands = [bio.read_csv_matrix(f"{args.in_prefix}_{name}.csv")
             for name in ("approx", "detail1", "detail2", "detail3")]
    subbands = SubbandSet(approx=bands[0], details=tuple(bands[1:]), bank_name=bank.name)
    image = synthesize(subbands, bank)
    bio.write_pgm(args.out, image, maxval=args.maxval)
    print(f"wrote {image.shape[1]}x{image.shape[0]} image -> {args.out}")
    return 0


def cmd_compare(args) -> int:
    pixels, _ = bio.read_pgm(args.image)
    banks = [_load_bank(p) for p in args.masks]
    rows = compare_filters(pixels, banks)
    print(f"{'bank':<28} {'approx':>9} {'det1':>9} {'det2':>9} {'det3':>9} "
          f"{'n99':>7} {'pr err':>10}")
    worst = 0.0
    for row in rows:
        f = row.fractions
        print(f"{row.bank_name:<28} {f[0]:9.6f} {f[1]:9.6f} {f[2]:9.6f} {f[3]:9.6f} "
              f"{row.coeffs_for_99:7d} {row.reconstruction_error:10.3e}")
        worst = max(worst, row.reconstruction_error)
    return 0 if worst < 1e-9 else 1


def cmd_scan(args) -> int:
    records = scan_case1(args.grid, cascade_level=args.level)
    bio.write_csv(args.output, SCAN_HEADER, (r.as_row() for r in records))
    print(f"wrote {len(records)} records -> {args.output}")
    return 0


def cmd_moments8(args) -> int:
    mask = bio.read_mask(args.mask)
    coeffs = polyphase8_split(mask)
    qmf_res, sum_res = check_qmf8(coeffs)
    mom_res = check_moment_equations8(coeffs)
    print(f"qmf residuals (25): max {qmf_res.max():.3e}")
    print(f"tap-sum residual:   {sum_res:.3e}")
    print(f"moment residuals:   max {mom_res.max():.3e}")
    ok = qmf_res.max() < 1e-10 and sum_res < 1e-10 and mom_res.max() < 1e-12
    try:
        sums = solve_moment_sums(coeffs)
    except LemmaViolated as exc:
        print(f"moment sums: FAIL ({exc})")
        return 1
    print(f"moment sums: r0={sums.r0:.6f} s0={sums.s0:.6f} t0={sums.t0:.6f} "
          f"u0={sums.u0:.6f}")
    print(f"             r1={sums.r1:.6f} s1={sums.s1:.6f} t1={sums.t1:.6f} "
          f"u1={sums.u1:.6f}")
    print(f"             alpha={sums.alpha8:.6f} beta={sums.beta8:.6f}")
    print(f"overall: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


_COMMANDS = {
    "gen": cmd_gen,
    "verify": cmd_verify,
    "lawton": cmd_lawton,
    "cycles": cmd_cycles,
    "cascade": cmd_cascade,
    "dwt": cmd_dwt,
    "idwt": cmd_idwt,
    "compare": cmd_compare,
    "scan": cmd_scan,
    "moments8": cmd_moments8,
}

_USAGE_ERRORS = (ParseError, WrongSize, InvalidBranch, LevelsOutOfRange,
                 SupportTooLarge, OddDimensions, OSError, ValueError)
_CHECK_ERRORS = (ConstructionInconsistent, NotSymmetric, LemmaViolated)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _CHECK_ERRORS as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BisymwaveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
