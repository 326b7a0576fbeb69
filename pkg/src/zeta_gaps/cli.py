"""Command-line front end.

    zeta-gaps constants
    zeta-gaps table1 [--r-max 20]
    zeta-gaps table2
    zeta-gaps solve --method {ctb,tsang,unconditional} --r N --direction {sup,inf}
    zeta-gaps check-uniform --method {ctb,tsang} [--r-max N]
    zeta-gaps zeros --t-min A --t-max B [--out FILE]
    zeta-gaps gaps --r N [N ...] --zeros-file PATH

Every command prints one record (``--format json``, the default, or
``csv``) on stdout. Exit status: 0 success, 1 domain/validation error,
2 bad arguments.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import __version__
from . import ctb_bounds, tsang_bounds, unconditional, zero_data
from .constants import compute_A0_B0
from .errors import ZetaGapsError
from .model import Direction
from .output import SIG_DIGITS, OutputRecord
from .special_math import DEFAULT_TOL


def _metadata(args, **extra):
    meta = {"version": __version__, "significant_digits": SIG_DIGITS,
            "quadrature_tol": args.tol}
    meta.update(extra)
    return meta


def cmd_constants(args):
    c = compute_A0_B0()
    row = {"A0": c.value, "B0": c.argmax, "bracket_lo": c.bracket[0],
           "bracket_hi": c.bracket[1]}
    return OutputRecord("constants", {}, [row], _metadata(args, bracket_tol=1e-8))


def cmd_table1(args):
    rows = []
    for row in ctb_bounds.table1(range(1, args.r_max + 1), tol=args.tol, workers=args.workers):
        (pts, pls), (pti, pli) = row.printed_sup, row.printed_inf
        rows.append({
            "r": row.r,
            "theta_sup": row.sup.theta, "ell_sup": row.sup.ell, "margin_sup": row.sup.margin,
            "theta_inf": row.inf.theta, "ell_inf": row.inf.ell, "margin_inf": row.inf.margin,
            "printed_theta_sup": _nan_none(pts), "printed_ell_sup": _nan_none(pls),
            "printed_margin_sup": _nan_none(row.printed_margin_sup),
            "printed_theta_inf": _nan_none(pti), "printed_ell_inf": _nan_none(pli),
            "printed_margin_inf": _nan_none(row.printed_margin_inf),
        })
    return OutputRecord("table1", {"r_max": args.r_max}, rows,
                        _metadata(args, theta_tol=ctb_bounds.THETA_TOL, ell_tol=ctb_bounds.ELL_TOL))


def _nan_none(x):
    return None if isinstance(x, float) and math.isnan(x) else x


def cmd_table2(args):
    rows = []
    for row in tsang_bounds.table2(range(1, args.r_max + 1)):
        printed = tsang_bounds.TABLE2_PRINTED.get(row.r, (None, None))
        rows.append({"r": row.r, "theta_sup": row.theta_sup, "theta_inf": row.theta_inf,
                     "margin_sup": row.margin_sup, "margin_inf": row.margin_inf,
                     "printed_theta_sup": printed[0], "printed_theta_inf": printed[1]})
    return OutputRecord("table2", {"r_max": args.r_max}, rows,
                        _metadata(args, theta_tol=tsang_bounds.THETA_TOL))


def cmd_solve(args):
    params = {"method": args.method, "r": args.r, "direction": args.direction}
    d = Direction(args.direction)
    if args.method == "ctb":
        if args.ell is not None:
            res = ctb_bounds.solve_theta_result(args.r, args.ell, d, tol=args.tol)
        else:
            res = ctb_bounds.optimize_ell(args.r, d, tol=args.tol)
        params["ell"] = args.ell
        row = {"r": res.r, "direction": res.direction, "theta": res.theta,
               "ell": res.ell, "margin": res.margin}
    elif args.method == "tsang":
        res = tsang_bounds.solve_theta_tsang(args.r, d)
        row = {"r": res.r, "direction": res.direction, "theta": res.theta,
               "ell": None, "margin": res.margin}
    else:
        hyp = unconditional.OscillationHypothesis(args.c, args.beta)
        theta = unconditional.solve_gap_theta(hyp, args.r, d)
        margin = unconditional.gap_criterion_rhs(hyp, args.r, theta, d) - theta
        params.update(c=args.c, beta=args.beta)
        row = {"r": args.r, "direction": d, "theta": theta,
               "gap_exponent": hyp.gap_exponent, "margin": margin}
    return OutputRecord("solve", params, [row], _metadata(args))


def cmd_check_uniform(args):
    rows = []
    if args.method == "ctb":
        r_max = args.r_max or 10 ** 4
        a0 = compute_A0_B0().value
        for d, theta in ((Direction.SUP, a0), (Direction.INF, ctb_bounds.UNIFORM_INF_THETA)):
            chk = ctb_bounds.uniform_check(d, theta, r_max)
            rows.append({
                "direction": d, "theta": theta, "ok": chk.ok,
                "worst_margin": chk.worst_margin, "worst_r": chk.worst_r,
                "brace_monotone": chk.brace_monotone,
                "brace_at_r8": ctb_bounds.closed_form_brace(8, theta, d),
                "rhs_at_r8": ctb_bounds.closed_form_rhs(8, theta, d),
            })
    else:
        r_max = args.r_max or 10 ** 3
        chk = tsang_bounds.uniform_tsang_check(r_max)
        rows.append({"direction": Direction.SUP, "theta": tsang_bounds.UNIFORM_SUP_THETA,
                     "ok": chk.sup_ok, "worst_margin": chk.sup_worst_margin,
                     "min_x_minus_2pi": chk.min_x_minus_2pi,
                     "threshold_from_r": chk.threshold_from_r})
        rows.append({"direction": Direction.INF, "theta": tsang_bounds.UNIFORM_INF_THETA,
                     "ok": chk.inf_ok, "worst_margin": chk.inf_worst_margin,
                     "min_x_minus_2pi": None, "threshold_from_r": None})
    return OutputRecord("check-uniform", {"method": args.method, "r_max": r_max}, rows,
                        _metadata(args))


def cmd_zeros(args):
    table = zero_data.find_zeros(args.t_min, args.t_max)
    if args.out:
        zero_data.save_zeros(table, args.out)
    rows = [{"n": i + 1, "ordinate": float(g)} for i, g in enumerate(table.ordinates)]
    return OutputRecord("zeros", {"t_min": args.t_min, "t_max": args.t_max, "out": args.out},
                        rows, _metadata(args, root_tol=zero_data.ROOT_TOL,
                                        scan_step=zero_data.SCAN_STEP))


def cmd_gaps(args):
    table = zero_data.load_zeros(args.zeros_file)
    rows = []
    for r in args.r:
        st = zero_data.gap_extrema(table, r, args.scale)
        rows.append({"r": st.r, "max_normalized": st.max_normalized,
                     "min_normalized": st.min_normalized, "argmax_index": st.argmax_index,
                     "argmin_index": st.argmin_index, "count": st.count, "mean": st.mean})
    return OutputRecord("gaps", {"r": list(args.r), "zeros_file": str(args.zeros_file),
                                 "scale": args.scale}, rows, _metadata(args))


def _positive_int(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _positive_float(s):
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL,
                        help="quadrature absolute-error target (default 1e-9)")

    parser = argparse.ArgumentParser(prog="zeta-gaps", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", parents=[common], help="A0 and B0")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("table1", parents=[common], help="optimised (theta, ell) pairs")
    p.add_argument("--r-max", type=_positive_int, default=20)
    p.add_argument("--workers", type=_positive_int, default=None,
                   help="process-pool size for rows (1 disables the pool)")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", parents=[common], help="moment-method constants")
    p.add_argument("--r-max", type=_positive_int, default=20)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("solve", parents=[common], help="solve one bound")
    p.add_argument("--method", choices=("ctb", "tsang", "unconditional"), required=True)
    p.add_argument("--r", type=_positive_int, required=True)
    p.add_argument("--direction", choices=("sup", "inf"), required=True)
    p.add_argument("--ell", type=float, default=None, help="fix ell (ctb only)")
    p.add_argument("--c", type=float, default=1.0, help="oscillation constant (unconditional)")
    p.add_argument("--beta", type=float, default=1.0 / 3.0, help="oscillation exponent (unconditional)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check-uniform", parents=[common], help="uniform-in-r sweeps")
    p.add_argument("--method", choices=("ctb", "tsang"), required=True)
    p.add_argument("--r-max", type=_positive_int, default=None)
    p.set_defaults(func=cmd_check_uniform)

    p = sub.add_parser("zeros", parents=[common], help="locate zeta zeros")
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--out", default=None, help="also write a zero file")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("gaps", parents=[common], help="normalized r-gap extrema")
    p.add_argument("--r", type=_positive_int, nargs="+", required=True)
    p.add_argument("--zeros-file", required=True)
    p.add_argument("--scale", choices=("log", "local"), default="log")
    p.set_defaults(func=cmd_gaps)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        record = args.func(args)
    except ZetaGapsError as exc:
        msg = " ".join(str(exc).split())
        print(f"error: {exc.kind}: {msg}", file=stderr)
        return 1
    stdout.write(record.dumps(args.format))
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
