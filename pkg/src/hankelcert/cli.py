"""Command-line interface.

Exit codes: 0 when the requested check passes (or the command simply
computes something), 1 when a certification or consistency check fails,
2 on bad input.  ``--json`` emits a report with a ``schema_version`` field;
wall-clock data sits under the single top-level ``timing`` key so that the
rest of the document is byte-identical across runs with the same seed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .bernstein import STRATEGIES, BivariatePoly, Rectangle, certify_upper_bound
from .functionals import (
    H2_SCALE,
    H3_SCALE,
    CaratheodoryCoeffs,
    SchwarzCoeffs,
    coeffs_from_caratheodory,
    coeffs_from_schwarz,
    hankel_h2,
    hankel_h3,
)
from .parametrizations import ANGLE_POLICIES, params_to_json, sample_cuboid
from .phi import build_f_from_schwarz, check_phi_properties, extremal_function
from .pipelines import H2Config, H3Config, verify_h2, verify_h3
from .scalar import GaussianRational, rational_to_json, scalar_to_json
from .series import TruncatedSeries
from .ykc import YkcInput, ykc_closed_form, ykc_compare

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class InputError(ValueError):
    pass


# -- parsing helpers ---------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def parse_scalar(text: str):
    """``"3/4"``, ``"1/2-1/3i"``, ``"i"`` or ``"-2i"``."""
    t = text.replace(" ", "")
    if not t.endswith("i"):
        return parse_rational(t)
    t = t[:-1]
    k = max(t.rfind("+"), t.rfind("-"))
    re_part, im_part = ("0", t) if k <= 0 else (t[:k], t[k:])
    if im_part in ("", "+", "-"):
        im_part += "1"
    return GaussianRational(parse_rational(re_part), parse_rational(im_part))


def parse_rect(text: str) -> Rectangle:
    parts = text.split(",")
    if len(parts) != 4:
        raise InputError("--rect expects a,b,c,d")
    try:
        return Rectangle(*(parse_rational(p) for p in parts))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# -- output ------------------------------------------------------------------

def _emit(args, command: str, result: dict, text: str, timing: dict | None = None) -> None:
    if args.json:
        doc = {"schema_version": SCHEMA_VERSION, "tool_version": __version__, "command": command, "result": result}
        t = {"timestamp": datetime.now(timezone.utc).isoformat()}
        t.update(timing or {})
        doc["timing"] = t
        out = json.dumps(doc, indent=2) + "\n"
    else:
        out = text.rstrip("\n") + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _frac_json(q) -> dict:
    return rational_to_json(q, decimal=True)


# -- commands ----------------------------------------------------------------

def cmd_phi_check(args) -> int:
    t0 = time.perf_counter()
    rep = check_phi_properties(args.radial, args.angular)
    lines = [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in rep.checks.items()]
    lines.append(f"min |phi| = {rep.min_abs_phi:.6g}, max |phi| = {rep.max_abs_phi:.6g}")
    lines.append("verdict: " + ("pass" if rep.passed else "fail"))
    _emit(args, "phi-check", rep.to_dict(), "\n".join(lines), {"seconds": time.perf_counter() - t0})
    return EXIT_OK if rep.passed else EXIT_FAILED


def cmd_coeffs(args) -> int:
    vals = [parse_scalar(v) for v in args.values.split(",")]
    if len(vals) != 4:
        raise InputError("--values needs exactly four coefficients")
    if args.mode == "p":
        src = CaratheodoryCoeffs(*vals)
        a = coeffs_from_caratheodory(src)
    else:
        src = SchwarzCoeffs(*vals)
        a = coeffs_from_schwarz(src)
    h2, h3 = hankel_h2(a), hankel_h3(a)
    result = {
        "mode": args.mode,
        "within_bounds": src.within_bounds(),
        "a": [scalar_to_json(x, decimal=True) for x in a.as_tuple()],
        "H2": scalar_to_json(h2, decimal=True),
        "H3": scalar_to_json(h3, decimal=True),
        "H2_normalized": scalar_to_json(H2_SCALE * h2, decimal=True),
        "H3_normalized": scalar_to_json(H3_SCALE * h3, decimal=True),
    }
    text = "\n".join(
        [f"a{k} = {x}" for k, x in zip(range(2, 6), a.as_tuple())]
        + [f"H2(2) = {h2}", f"H3(1) = {h3}"]
        + ([] if src.within_bounds() else ["warning: coefficients exceed the class bounds"])
    )
    _emit(args, "coeffs", result, text)
    return EXIT_OK


def cmd_sample(args) -> int:
    if args.count < 1:
        raise InputError("--count must be positive")
    samples = sample_cuboid(args.seed, args.count, args.mode, args.angles)
    rows = [params_to_json(s) for s in samples]
    _emit(args, "sample", {"mode": args.mode, "seed": args.seed, "samples": rows}, "\n".join(json.dumps(r) for r in rows))
    return EXIT_OK


def cmd_ykc(args) -> int:
    inp = YkcInput(parse_rational(args.a), parse_rational(args.b), parse_rational(args.c))
    res = ykc_closed_form(inp)
    value = res.value
    result = {
        "value": _frac_json(value) if isinstance(value, Fraction) else {"float": value},
        "branch": res.branch,
    }
    lines = [f"Y = {value}  (branch {res.branch})"]
    code = EXIT_OK
    if args.brute:
        cmp = ykc_compare(inp, args.tol)
        result["brute_force"] = cmp.oracle.value
        result["deviation"] = cmp.deviation
        result["disagree"] = cmp.disagree
        lines.append(f"brute force = {cmp.oracle.value:.12g}, deviation = {cmp.deviation:.3g}")
        if cmp.disagree:
            lines.append("DISAGREEMENT beyond tolerance")
            code = EXIT_FAILED
    _emit(args, "ykc", result, "\n".join(lines))
    return code


def cmd_bernstein(args) -> int:
    try:
        with open(args.poly, encoding="utf-8") as fh:
            poly = BivariatePoly.from_json(json.load(fh))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read polynomial: {exc}") from exc
    rect = parse_rect(args.rect)
    bound = parse_rational(args.bound)
    if args.depth < 0:
        raise InputError("--depth must be nonnegative")
    t0 = time.perf_counter()
    rep = certify_upper_bound(poly, rect, bound, args.depth, args.strategy, corner_fallback=args.corner)
    leaves = list(rep.root.leaves())
    text = "\n".join(
        [f"{'  ' * n.depth}{n.rect}: {n.status} (max {n.bernstein_max})" for n in rep.root.walk()]
        + [f"verdict: {rep.verdict} ({len(leaves)} leaves)"]
    )
    _emit(args, "bernstein", rep.to_dict(), text, {"seconds": time.perf_counter() - t0})
    return EXIT_OK if rep.certified else EXIT_FAILED


def _theorem_text(rep) -> str:
    lines = [f"{rep.theorem}: bound {rep.bound}, verdict {rep.verdict}"]
    for s in rep.subchecks:
        lines.append(f"  ({s.key}) {'pass' if s.passed else 'FAIL'}  {s.title}")
    lines.append(f"  witness: omega = {rep.witness['omega']}, value {Fraction(rep.witness['value']['num'], rep.witness['value']['den'])}")
    return "\n".join(lines)


def cmd_h2(args) -> int:
    cfg = H2Config(args.samples, args.seed, args.grid, args.identity_samples)
    rep = verify_h2(cfg, threads=args.threads)
    _emit(args, "h2 verify", rep.to_dict(), _theorem_text(rep), rep.timing())
    return EXIT_OK if rep.certified else EXIT_FAILED


def cmd_h3(args) -> int:
    if args.strategy not in STRATEGIES:
        raise InputError(f"unknown strategy {args.strategy!r}")
    cfg = H3Config(args.samples, args.seed, args.identity_samples, args.grid, args.ygrid, args.depth, args.strategy)
    rep = verify_h3(cfg, threads=args.threads)
    _emit(args, "h3 verify", rep.to_dict(), _theorem_text(rep), rep.timing())
    return EXIT_OK if rep.certified else EXIT_FAILED


def _series_result(f: TruncatedSeries) -> dict:
    return {"series": str(f), "coefficients": [scalar_to_json(c, decimal=True) for c in f.coeffs]}


def cmd_extremal(args) -> int:
    power = {"z2": 2, "z3": 3}[args.omega]
    if args.order < 1:
        raise InputError("--order must be positive")
    f = extremal_function(power, args.order)
    _emit(args, "extremal", dict(omega=args.omega, **_series_result(f)), str(f))
    return EXIT_OK


def cmd_series(args) -> int:
    cs = [parse_scalar(v) for v in args.schwarz.split(",")]
    if args.order < 1:
        raise InputError("--order must be positive")
    w = TruncatedSeries.from_coeffs([0] + cs, max(args.order - 1, len(cs)))
    f = build_f_from_schwarz(w, args.order)
    _emit(args, "series", _series_result(f), str(f))
    return EXIT_OK


def cmd_verify_all(args) -> int:
    t0 = time.perf_counter()
    phi = check_phi_properties()
    h2 = verify_h2(H2Config(seed=args.seed), threads=args.threads)
    h3 = verify_h3(H3Config(seed=args.seed), threads=args.threads)
    ok = phi.passed and h2.certified and h3.certified
    result = {
        "verdict": "certified" if ok else "not-certified",
        "phi_check": phi.to_dict(),
        "h2": h2.to_dict(),
        "h3": h3.to_dict(),
    }
    text = "\n".join(
        [f"phi-check: {'pass' if phi.passed else 'FAIL'}", _theorem_text(h2), _theorem_text(h3)]
    )
    timing = {"seconds": time.perf_counter() - t0, "h2": h2.timing(), "h3": h3.timing()}
    _emit(args, "verify-all", result, text, timing)
    return EXIT_OK if ok else EXIT_FAILED


# -- parser ------------------------------------------------------------------

def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=int, default=d(0), help="random seed (default 0)")
    parser.add_argument("--json", action="store_true", default=d(False), help="emit a JSON report")
    parser.add_argument("--out", default=d(None), help="write output to this path")
    parser.add_argument("--threads", type=int, default=d(1), help="worker threads for independent sub-checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hankelcert", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi-check", parents=[common], help="grid check of the properties of phi")
    p.add_argument("--radial", type=int, default=64)
    p.add_argument("--angular", type=int, default=256)
    p.set_defaults(func=cmd_phi_check)

    p = sub.add_parser("coeffs", parents=[common], help="a2..a5 and Hankel determinants from p or c coefficients")
    p.add_argument("--mode", choices=("p", "c"), default="c")
    p.add_argument("--values", required=True, help="four comma-separated values, e.g. 0,1,0,0 or 1/2+1/3i,...")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("sample", parents=[common], help="deterministic parameter samples")
    p.add_argument("--mode", choices=("lz", "ps"), default="lz")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--angles", choices=ANGLE_POLICIES, default="mixed")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("ykc", parents=[common], help="max of |A+Bz+Cz^2|+1-|z|^2 over the unit disk")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--brute", action="store_true", help="also run the grid search and compare")
    p.add_argument("--tol", type=float, default=5e-6)
    p.set_defaults(func=cmd_ykc)

    p = sub.add_parser("bernstein", parents=[common], help="certify poly <= bound on a rectangle")
    p.add_argument("--poly", required=True, help="polynomial JSON file")
    p.add_argument("--rect", default="0,1,0,1", help="a,b,c,d for [a,b]x[c,d]")
    p.add_argument("--bound", required=True, help="rational bound, e.g. 480 or 1022/3")
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p.add_argument("--no-corner", dest="corner", action="store_false", help="disable the corner certificate")
    p.set_defaults(func=cmd_bernstein)

    for name, func in (("h2", cmd_h2), ("h3", cmd_h3)):
        outer = sub.add_parser(name, help=f"{name.upper()} theorem pipeline")
        inner = outer.add_subparsers(dest="action", required=True)
        v = inner.add_parser("verify", parents=[common], help="run every sub-check")
        v.add_argument("--samples", type=int, default=100_000)
        v.add_argument("--identity-samples", type=int, default=500)
        if name == "h2":
            v.add_argument("--grid", type=int, default=199, help="number of interior p1 grid points")
        else:
            v.add_argument("--grid", type=int, default=101, help="points per axis of the (p1, x) grid")
            v.add_argument("--ygrid", type=int, default=11)
            v.add_argument("--depth", type=int, default=2)
            v.add_argument("--strategy", choices=STRATEGIES, default="paper-quadrants")
        v.set_defaults(func=func)

    p = sub.add_parser("extremal", parents=[common], help="series of the extremal function")
    p.add_argument("--omega", choices=("z2", "z3"), required=True)
    p.add_argument("--order", type=int, default=9)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("series", parents=[common], help="series of f from Schwarz coefficients c1, c2, ...")
    p.add_argument("--schwarz", required=True, help="comma-separated c1,c2,...")
    p.add_argument("--order", type=int, default=9)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify-all", parents=[common], help="phi-check, h2 verify and h3 verify")
    p.set_defaults(func=cmd_verify_all)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, ValueError, TypeError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
