"""Command-line front end: ``zetamono {eval,scan,verify,threshold}``.

Exit codes: 0 success, 2 pole/zero/input errors, 3 scan violations,
4 failed claims, 5 no sign change in the threshold bracket.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import numpy as np

from .gamma import digamma, gamma
from .logderiv import log_derivative
from .types import BracketError, FunctionId, UnknownClaimError, ZetamonoError
from .verification import (
    REFERENCE_THRESHOLD,
    GridSpec,
    find_failure_threshold,
    run_suite,
    scan_monotonicity,
)
from .zeta import eta, values, xi, zeta

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VIOLATIONS = 3
EXIT_FAILED_CLAIMS = 4
EXIT_BRACKET = 5

EVAL_FUNCTIONS = ("zeta", "eta", "xi", "gamma", "digamma", "logderiv-zeta", "logderiv-eta", "logderiv-xi")
RANGE_FLAGS = ("--sigma", "--t", "--bracket")
JSON_SCHEMA = 1
SCALAR_EVAL = {"zeta": zeta, "eta": eta, "xi": xi, "gamma": gamma, "digamma": digamma}


def parse_range(text: str, need_step: bool = True) -> tuple:
    """``min:max:step`` (or ``min:max`` when ``need_step`` is false) as floats."""
    parts = text.split(":")
    if len(parts) != (3 if need_step else 2):
        raise argparse.ArgumentTypeError(f"expected {'min:max:step' if need_step else 'min:max'}, got {text!r}")
    try:
        nums = tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric range {text!r}") from None
    if not all(math.isfinite(x) for x in nums) or nums[0] >= nums[1]:
        raise argparse.ArgumentTypeError(f"range must satisfy min < max: {text!r}")
    if len(nums) == 3 and nums[2] <= 0:
        raise argparse.ArgumentTypeError(f"step must be positive: {text!r}")
    return nums


def _bracket(text: str) -> tuple:
    return parse_range(text, need_step=False)


def _glue_negative_ranges(argv: list) -> list:
    # "--sigma -15:0:0.1" would otherwise be read as an unknown option
    out = []
    it = iter(range(len(argv)))
    for i in it:
        tok = argv[i]
        if tok in RANGE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            next(it, None)
        else:
            out.append(tok)
    return out


def _fmt(x: float) -> str:
    return repr(float(x))


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.15g} {'-' if z.imag < 0 else '+'} {abs(z.imag):.15g}i"


def cmd_eval(args) -> int:
    s = complex(args.sigma, args.t)
    name = args.function
    if name.startswith("logderiv-"):
        f = FunctionId.parse(name.split("-", 1)[1])
        ratio = log_derivative(f, s)
        v, err, dv, derr = (a[0] for a in values(f, s))
        # first-order propagation through the quotient
        bound = abs(ratio) * (err / abs(v) + derr / max(abs(dv), 1e-300))
        print(f"{name}({_fmt_complex(s)}) = {_fmt_complex(ratio)}")
        print(f"err_bound = {bound:.3e}")
        print(f">>> Re = {ratio.real:.15g}  (|{f.value}| {'increasing' if ratio.real > 0 else 'decreasing'} in sigma)")
        return EXIT_OK
    res = SCALAR_EVAL[name](s)
    print(f"{name}({_fmt_complex(s)}) = {_fmt_complex(res.value)}")
    print(f"err_bound = {res.err_bound:.3e}{'' if res.rigorous else ' (estimate)'}")
    return EXIT_OK


def write_scan_csv(path, report) -> None:
    pts = report.grid.points()
    re = report.values
    flagged = report.flagged
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["sigma", "t", "re_logderiv", "sign", "flagged"])
        for i in range(pts.shape[0]):
            t = float(f"{pts[i, 0].imag:.12g}")
            for j in range(pts.shape[1]):
                sg = float(f"{pts[i, j].real:.12g}")
                r = re[i, j]
                sign = int(np.sign(r)) if np.isfinite(r) else 0
                w.writerow([_fmt(sg), _fmt(t), _fmt(r), sign, int(flagged[i, j])])


def cmd_scan(args) -> int:
    s0, s1, ds = args.sigma
    t0, t1, dt = args.t
    grid = GridSpec(s0, s1, ds, t0, t1, dt, mirror_t=args.mirror)
    report = scan_monotonicity(args.function, grid, args.expect)
    if args.out:
        write_scan_csv(args.out, report)
    n_viol = len(report.violations)
    w = report.witness
    wtxt = f"sigma={w.sigma:.6g} t={w.t:.6g}" if w else "none"
    print(
        f"scan {args.function}: {grid.size} points, {int(report.flagged.sum())} flagged, "
        f"{n_viol} violations, {len(report.row_failures)} row failures, "
        f"worst margin {report.worst_margin:.6g} at {wtxt}"
    )
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def report_json(records, timing: bool = True) -> str:
    doc = {"schema": JSON_SCHEMA, "records": [r.to_dict(timing) for r in records]}
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def cmd_verify(args) -> int:
    records = run_suite(args.claims, zeros_path=args.zeros, seed=args.seed)
    for r in records:
        w = f" at sigma={r.witness.sigma:.6g} t={r.witness.t:.6g}" if r.witness else ""
        print(f"{'PASS' if r.passed else 'FAIL'} {r.claim_id}: worst margin {r.worst_margin:.6g}{w}")
    text = report_json(records, timing=not args.deterministic)
    if args.json:
        Path(args.json).write_text(text, encoding="utf-8", newline="\n")
    n_fail = sum(not r.passed for r in records)
    print(f"{len(records) - n_fail}/{len(records)} claims passed")
    return EXIT_OK if n_fail == 0 else EXIT_FAILED_CLAIMS


def cmd_threshold(args) -> int:
    res = find_failure_threshold(args.function, args.sigma, args.bracket, args.tol, args.sigma_step)
    print(f"t* = {res.t_star:.6f} (bracket width {res.width:.2e})")
    print(f"witness sigma = {res.sigma_witness:.6f}")
    print(f"reference {REFERENCE_THRESHOLD}: difference {res.t_star - REFERENCE_THRESHOLD:+.6f}")
    if not res.consistent:
        print("warning: failure predicate is not one-sided at the tested ordinates")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zetamono", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a function at sigma + it")
    e.add_argument("function", choices=EVAL_FUNCTIONS)
    e.add_argument("sigma", type=float)
    e.add_argument("t", type=float)
    e.set_defaults(run=cmd_eval)

    s = sub.add_parser("scan", help="sign scan of Re(f'/f) over a grid")
    s.add_argument("function", choices=[f.value for f in FunctionId])
    s.add_argument("--sigma", type=parse_range, required=True, metavar="MIN:MAX:STEP")
    s.add_argument("--t", type=parse_range, required=True, metavar="MIN:MAX:STEP")
    s.add_argument("--expect", type=int, choices=(-1, 1), required=True)
    s.add_argument("--mirror", action="store_true", help="also scan the rows -t")
    s.add_argument("--out", help="CSV output path")
    s.set_defaults(run=cmd_scan)

    v = sub.add_parser("verify", help="run registered claims ('all' for every claim)")
    v.add_argument("claims", nargs="+")
    v.add_argument("--zeros", help="zeros file, needed by hadamard_consistency")
    v.add_argument("--json", help="JSON report path")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--deterministic", action="store_true", help="write runtime_ms as 0 for byte-stable reports")
    v.set_defaults(run=cmd_verify)

    t = sub.add_parser("threshold", help="bisect the monotonicity failure threshold in t")
    t.add_argument("function", choices=[f.value for f in FunctionId])
    t.add_argument("--bracket", type=_bracket, default=(6.0, 7.0), metavar="LO:HI")
    t.add_argument("--tol", type=float, default=1e-3)
    t.add_argument("--sigma", type=_bracket, default=(-30.0, 0.5), metavar="LO:HI", help="sigma interval, upper end <= 0.5")
    t.add_argument("--sigma-step", type=float, default=0.01)
    t.set_defaults(run=cmd_threshold)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_negative_ranges(argv))
    try:
        return args.run(args)
    except BracketError as exc:
        print(f"BracketError: {exc}", file=sys.stderr)
        return EXIT_BRACKET
    except UnknownClaimError as exc:
        print(f"UnknownClaimError: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ZetamonoError, OSError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
