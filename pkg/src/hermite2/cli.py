"""hermite2 command line.

Subcommands: gen, table, alpha, eval, verify, bench.
Exit codes: 0 success / all checks pass, 1 an identity check failed, 2 usage error.
The default output format can be set with HERMITE2_FORMAT.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from typing import List, Optional, Sequence

from .hermite import BUILDERS, alpha_triangle, h2_eval_float, hermite2
from .identities import SuiteConfig, Status, identity_ids, run_suite, select, verdict
from .poly import LaurentPoly, format_latex, format_plain
from .rings import format_rational, parse_rational

FORMAT_ENV = "HERMITE2_FORMAT"
FORMATS = ("plain", "json", "csv", "latex")


def _default_format() -> str:
    fmt = os.environ.get(FORMAT_ENV, "plain")
    return fmt if fmt in FORMATS else "plain"


def _dense(p: LaurentPoly) -> List[str]:
    if p.is_zero():
        return ["0"]
    return [format_rational(p.coeff(e)) for e in range(0, p.degree + 1)]


# --- renderers ------------------------------------------------------------------

def render_poly(m: int, n: int, p: LaurentPoly, fmt: str) -> str:
    if fmt == "plain":
        return format_plain(p)
    if fmt == "json":
        return json.dumps({"m": m, "n": n, "poly": p.to_json_obj()}, separators=(",", ":"))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "n", "coeffs"])
        w.writerow([m, n, *_dense(p)])
        return buf.getvalue().rstrip("\n")
    return f"${format_latex(p)}$"


def render_table(m_max: int, n_max: int, fmt: str) -> str:
    ms, ns = range(1, m_max + 1), range(1, n_max + 1)
    cells = {(m, n): hermite2(m, n) for m in ms for n in ns}
    if fmt == "json":
        return json.dumps([{"m": m, "n": n, "poly": cells[m, n].to_json_obj()} for m in ms for n in ns],
                          separators=(",", ":"))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "n", "coeffs"])
        for m in ms:
            for n in ns:
                w.writerow([m, n, *_dense(cells[m, n])])
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        cols = "|".join("c" for _ in ns)
        lines = [
            rf"\begin{{tabular}}{{||c||{cols}||}}",
            r"\hline",
            r"$H_{m,n}$ & " + " & ".join(f"$n={n}$" for n in ns) + r" \\",
            r"\hline\hline",
        ]
        for m in ms:
            row = " & ".join(f"${format_latex(cells[m, n])}$" for n in ns)
            lines.append(f"$m={m}$ & {row} " + r"\\")
            lines.append(r"\hline")
        lines.append(r"\end{tabular}")
        return "\n".join(lines)
    header = "\t".join(["m\\n"] + [str(n) for n in ns])
    rows = ["\t".join([str(m)] + [format_plain(cells[m, n]) for n in ns]) for m in ms]
    return "\n".join([header] + rows)


def render_alpha(nu_max: int, fmt: str) -> str:
    rows = alpha_triangle(nu_max).rows
    if fmt == "json":
        return json.dumps([list(r) for r in rows])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["nu", "j", "alpha"])
        for nu, row in enumerate(rows):
            for j, a in enumerate(row):
                w.writerow([nu, j, a])
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        head = r"\alpha_{j,\nu} & " + " & ".join(f"j={j}" for j in range(nu_max + 1)) + r" \\"
        body = [rf"\nu={nu} & " + " & ".join(str(a) for a in row) + r" \\" for nu, row in enumerate(rows)]
        return "\n".join([r"\begin{array}{c||" + "c" * (nu_max + 1) + "}", head, r"\hline\hline", *body,
                          r"\end{array}"])
    return "\n".join(" ".join(str(a) for a in row) for row in rows)


# --- commands -----------------------------------------------------------------------

def cmd_gen(args) -> int:
    print(render_poly(args.m, args.n, hermite2(args.m, args.n), args.format), file=args.out)
    return 0


def cmd_table(args) -> int:
    print(render_table(args.mmax, args.nmax, args.format), file=args.out)
    return 0


def cmd_alpha(args) -> int:
    print(render_alpha(args.nu_max, args.format), file=args.out)
    return 0


def cmd_eval(args) -> int:
    if args.float:
        print(repr(h2_eval_float(args.m, args.n, float(args.x))), file=args.out)
    else:
        print(format_rational(hermite2(args.m, args.n)(args.x)), file=args.out)
    return 0


def _suite_config(args) -> SuiteConfig:
    cfg = SuiteConfig(variant=args.variant, seed=args.seed)
    for flag, field in (("mmax", "m_max"), ("nmax", "n_max"), ("rmax", "r_max"), ("numax", "nu_max"),
                        ("order", "series_order"), ("order", "exp_order"), ("cases", "burchnall_cases")):
        v = getattr(args, flag)
        if v is not None:
            setattr(cfg, field, v)
    for flag, lo, hi in (("m", "m_min", "m_max"), ("n", "n_min", "n_max"), ("r", "r_min", "r_max")):
        v = getattr(args, flag)
        if v is not None:
            setattr(cfg, lo, v)
            setattr(cfg, hi, v)
    if args.nu is not None:
        cfg.nu_max = args.nu
    if args.m is not None or args.n is not None:
        cfg.addition_max = max(cfg.addition_max, cfg.m_max + cfg.n_max)
        cfg.nielsen_mr_max = max(cfg.nielsen_mr_max, cfg.m_max, cfg.r_max)
        cfg.nielsen_n_max = max(cfg.nielsen_n_max, cfg.n_max)
    if args.id:
        cfg.ids = frozenset(args.id)
    return cfg


def cmd_verify(args) -> int:
    if args.id:
        unknown = sorted(set(args.id) - set(identity_ids()))
        if unknown:
            print(f"unknown identity id(s): {', '.join(unknown)}", file=sys.stderr)
            return 2
    cfg = _suite_config(args)
    reports = select(run_suite(cfg), cfg.variant)
    ok = verdict(reports, cfg.variant)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], separators=(",", ":")), file=args.out)
    else:
        counts = {s: sum(r.status is s for r in reports) for s in Status}
        for r in reports:
            if r.status is Status.FAIL or args.verbose:
                print(r.summary(), file=args.out)
        print(f"{len(reports)} checks: {counts[Status.PASS]} pass, {counts[Status.FAIL]} fail, "
              f"{counts[Status.SKIPPED]} skipped [{cfg.variant}]", file=args.out)
    return 0 if ok else 1


def cmd_bench(args) -> int:
    w = csv.writer(args.out, lineterminator="\n")
    w.writerow(["builder", "m", "n", "nanoseconds"])
    for name in args.builders:
        fn = BUILDERS[name]
        for m in range(args.mmax + 1):
            for n in range(args.nmax + 1):
                t0 = time.perf_counter_ns()
                for _ in range(args.repeat):
                    fn(m, n)
                w.writerow([name, m, n, (time.perf_counter_ns() - t0) // args.repeat])
    return 0


# --- parser -----------------------------------------------------------------------------

def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    fmt = _default_format()
    ap = argparse.ArgumentParser(prog="hermite2", description="Two-index Hermite polynomials H_{m,n}(x).")
    ap.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="print H_{m,n}")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--allow-negative", action="store_true",
                   help="accept negative indices (the polynomial is then 0)")
    g.add_argument("--format", choices=FORMATS, default=fmt)
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("table", help="grid of H_{m,n} for 1 <= m <= mmax, 1 <= n <= nmax")
    t.add_argument("--mmax", type=_positive, default=3)
    t.add_argument("--nmax", type=_positive, default=3)
    t.add_argument("--format", choices=FORMATS, default=fmt)
    t.set_defaults(func=cmd_table)

    a = sub.add_parser("alpha", help="alpha_{j,nu} triangle rows 0..nu_max")
    a.add_argument("nu_max", type=_nonneg)
    a.add_argument("--format", choices=FORMATS, default=fmt)
    a.set_defaults(func=cmd_alpha)

    e = sub.add_parser("eval", help="evaluate H_{m,n} at a rational point")
    e.add_argument("--m", type=_nonneg, required=True)
    e.add_argument("--n", type=_nonneg, required=True)
    e.add_argument("--x", type=_rational, required=True, help="e.g. 1/2, -3, 0.25")
    e.add_argument("--float", action="store_true", help="double-precision result")
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--all", action="store_true", help="every identity (the default when no --id)")
    v.add_argument("--id", action="append", help="restrict to an identity id (repeatable)")
    v.add_argument("--variant", choices=("corrected", "paper", "both"), default="corrected")
    for flag in ("m", "n", "r", "nu"):
        v.add_argument(f"--{flag}", type=_nonneg, help=f"pin index {flag}")
    for flag in ("mmax", "nmax", "rmax", "numax", "order", "cases"):
        v.add_argument(f"--{flag}", type=_nonneg)
    v.add_argument("--seed", type=int, default=SuiteConfig.seed)
    v.add_argument("--format", choices=("plain", "json"), default="json" if fmt == "json" else "plain")
    v.add_argument("-v", "--verbose", action="store_true", help="also list passing and skipped checks")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time the four builders (CSV: builder,m,n,nanoseconds)")
    b.add_argument("--mmax", type=_nonneg, default=8)
    b.add_argument("--nmax", type=_nonneg, default=8)
    b.add_argument("--repeat", type=_nonneg, default=1)
    b.add_argument("--builders", nargs="+", choices=sorted(BUILDERS), default=sorted(BUILDERS))
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "gen" and (args.m < 0 or args.n < 0) and not args.allow_negative:
        ap.error("negative indices need --allow-negative")
    if args.command == "bench" and args.repeat == 0:
        ap.error("--repeat must be >= 1")
    if args.output:
        with open(args.output, "w") as fh:
            args.out = fh
            return args.func(args)
    args.out = sys.stdout
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
