"""Command-line front end.

Subcommands ``bounds``, ``verify`` and ``maximize`` emit one row per alpha in
the fixed schema ``alpha,class,branch,bound,attained,numeric_max,gap,margin``;
``ybc-test`` compares the closed-form and brute-force disk maxima;
``series-demo`` prints the Koebe coefficient pipeline.

Exit status: 0 when every check is within tolerance, 1 on a verification
failure, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Sequence

import numpy as np

from . import __version__
from .bounds import bound, verify_sharpness
from .classes import AlphaClassSpec, ClassKind
from .errors import DomainError
from .functionals import (
    h21_log_inverse,
    h21_polynomial,
    inverse_coeffs,
    log_coeffs,
    log_inverse_coeffs,
    log_inverse_coeffs_series,
)
from .optimizer import SearchConfig, maximize_h21
from .series import koebe, revert
from .ybc import YInputs, y_brute_force_many, y_closed_form

FIELDS = ("alpha", "class", "branch", "bound", "attained", "numeric_max", "gap", "margin")
YBC_FIELDS = ("samples", "seed", "max_discrepancy", "tol", "worst_A", "worst_B", "worst_C", "worst_branch")
SOUNDNESS_TOL = 1e-6


class UsageError(Exception):
    pass


def fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)  # shortest string that round-trips exactly
    return str(v)


def parse_alpha(text: str) -> list[float]:
    """``value`` or inclusive ``start:stop:step``; range points outside (0, 1] are dropped."""
    parts = text.split(":")
    try:
        nums = [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"bad --alpha value {text!r}") from None
    if len(nums) == 1:
        a = nums[0]
        if not 0.0 < a <= 1.0:
            raise UsageError(f"alpha must lie in (0, 1], got {a}")
        return [a]
    if len(nums) != 3:
        raise UsageError("--alpha range must be start:stop:step")
    start, stop, step = nums
    if not step > 0 or not all(map(math.isfinite, nums)):
        raise UsageError("--alpha step must be positive and all parts finite")
    n = int(math.floor((stop - start) / step + 1e-12))
    vals = [round(start + k * step, 12) for k in range(n + 1)]
    vals = [a for a in vals if 0.0 < a <= 1.0]
    if not vals:
        raise UsageError(f"--alpha range {text!r} contains no value in (0, 1]")
    return vals


def _emit(args, command: str, rows: list[dict], fields: Sequence[str], failed: list[bool]) -> None:
    header = f"# hankel-loginv {__version__} command={command} seed={args.seed}"
    if getattr(args, "cls", None):
        header += f" class={args.cls}"
    buf = io.StringIO()
    if args.format == "json":
        json.dump({"command": command, "seed": args.seed,
                   "rows": [dict(r, ok=not bad) for r, bad in zip(rows, failed)]}, buf, indent=2)
        buf.write("\n")
    elif args.format == "csv":
        buf.write(header + "\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        for r in rows:
            w.writerow([fmt(r.get(k)) for k in fields])
    else:
        buf.write(header + "\n")
        for r, bad in zip(rows, failed):
            cells = [f"{k}={fmt(r[k])}" for k in fields if r.get(k) is not None]
            buf.write("  ".join(cells) + ("  FAIL" if bad else "") + "\n")
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for r, bad in zip(rows, failed):
        if bad:
            print("FAIL " + " ".join(f"{k}={fmt(v)}" for k, v in r.items() if v is not None), file=sys.stderr)


def _row(alpha, kind, branch, b, **kw) -> dict:
    r = dict.fromkeys(FIELDS)
    r.update(alpha=repr(float(alpha)), **{"class": kind.value}, branch=branch, bound=b)
    r.update(kw)
    return r


def cmd_bounds(args) -> int:
    kind = ClassKind.parse(args.cls)
    rows = []
    for a in parse_alpha(args.alpha):
        b, br = bound(AlphaClassSpec(kind, a))
        rows.append(_row(a, kind, br, b))
    _emit(args, "bounds", rows, FIELDS, [False] * len(rows))
    return 0


def cmd_verify(args) -> int:
    kind = ClassKind.parse(args.cls)
    tol = 1e-9 if args.tol is None else args.tol
    rows, failed = [], []
    for a in parse_alpha(args.alpha):
        rep = verify_sharpness(AlphaClassSpec(kind, a), tol)
        rows.append(_row(a, kind, rep.branch, rep.bound, attained=rep.attained, gap=rep.gap))
        failed.append(not rep.sharp)
    _emit(args, "verify", rows, FIELDS, failed)
    return 1 if any(failed) else 0


def cmd_maximize(args) -> int:
    kind = ClassKind.parse(args.cls)
    tol = 1e-3 if args.tol is None else args.tol
    cfg = SearchConfig(seed=args.seed) if args.grid is None else SearchConfig(grid_c=args.grid, seed=args.seed)
    rows, failed = [], []
    for a in parse_alpha(args.alpha):
        spec = AlphaClassSpec(kind, a)
        res = maximize_h21(spec, cfg)
        _, br = bound(spec)
        rows.append(_row(a, kind, br, res.bound, numeric_max=res.value, margin=res.margin))
        # the bound must never be exceeded and should be approached within tol
        failed.append(not (-SOUNDNESS_TOL <= res.margin <= tol))
    _emit(args, "maximize", rows, FIELDS, failed)
    return 1 if any(failed) else 0


def cmd_ybc(args) -> int:
    tol = 2e-5 if args.tol is None else args.tol
    rng = np.random.default_rng(args.seed)
    X = rng.uniform(-3.0, 3.0, size=(args.samples, 3))
    brute = y_brute_force_many(X[:, 0], X[:, 1], X[:, 2])
    closed = [y_closed_form(YInputs(*x)) for x in X]
    diff = np.abs(brute - np.array([v for v, _ in closed]))
    i = int(np.argmax(diff))
    row = dict(samples=args.samples, seed=args.seed, max_discrepancy=float(diff[i]), tol=tol,
               worst_A=float(X[i, 0]), worst_B=float(X[i, 1]), worst_C=float(X[i, 2]),
               worst_branch=closed[i][1])
    bad = not diff[i] <= tol
    _emit(args, "ybc-test", [row], YBC_FIELDS, [bad])
    return 1 if bad else 0


def cmd_series_demo(args) -> int:
    k = koebe(args.order)
    g = revert(k)
    gam = log_coeffs(k, min(5, args.order - 1))
    Gam = log_inverse_coeffs(k)
    h = h21_log_inverse(k)
    a2, a3, a4 = k[2], k[3], k[4]
    checks = {
        "Gamma via revert+log": max(abs(x - y) for x, y in zip(Gam, log_inverse_coeffs_series(k))),
        "H21 Gamma-product vs polynomial": abs(h - h21_polynomial(a2, a3, a4)),
        "A_n via revert vs closed form": max(abs(x - y) for x, y in zip(inverse_coeffs(k), (g[2], g[3], g[4]))),
    }

    def cx(z):
        z = complex(z)
        return format(z.real, ".12g") if abs(z.imag) < 1e-15 else format(z, ".12g")

    lines = [
        f"# hankel-loginv {__version__} command=series-demo seed={args.seed} order={args.order}",
        "Koebe k(z) = z/(1-z)^2",
        "a_n     = " + ", ".join(cx(v) for v in k.coeffs[1:]),
        "A_n     = " + ", ".join(cx(v) for v in g.coeffs[1:]),
        "gamma_n = " + ", ".join(cx(v) for v in gam),
        "Gamma_n = " + ", ".join(cx(v) for v in Gam),
        f"H21(Koebe) = {abs(h):.10f}",
    ]
    lines += [f"check {name}: {err:.3g}" for name, err in checks.items()]
    bad = any(err > 1e-12 for err in checks.values())
    text = "\n".join(lines) + "\n"
    if args.format == "json":
        text = json.dumps({"command": "series-demo", "seed": args.seed, "a": [cx(v) for v in k.coeffs[1:]],
                           "A": [cx(v) for v in g.coeffs[1:]], "gamma": [cx(v) for v in gam],
                           "Gamma": [cx(v) for v in Gam], "H21": abs(h), "checks": checks}, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hankel-loginv",
                                description="Second Hankel determinant of logarithmic inverse coefficients")
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float)
    common.add_argument("--out")
    common.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    sub = p.add_subparsers(dest="command", required=True)

    def with_class(name, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("--class", dest="cls", choices=("convex", "starlike"), required=True)
        s.add_argument("--alpha", default="0.05:1:0.05", help="value or start:stop:step")
        return s

    with_class("bounds", "piecewise bound per alpha").set_defaults(func=cmd_bounds)
    with_class("verify", "evaluate extremal functions against the bound").set_defaults(func=cmd_verify)
    m = with_class("maximize", "grid + golden-section search for the maximum")
    m.add_argument("--grid", type=int, help="points in c1 in [0, 2] (default 41)")
    m.set_defaults(func=cmd_maximize)
    y = sub.add_parser("ybc-test", parents=[common], help="closed-form vs brute-force disk maximum")
    y.add_argument("--samples", type=int, default=1000)
    y.set_defaults(func=cmd_ybc)
    d = sub.add_parser("series-demo", parents=[common], help="Koebe coefficient pipeline")
    d.add_argument("--order", type=int, default=10)
    d.set_defaults(func=cmd_series_demo)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed < 0:
        parser.print_usage(sys.stderr)
        print("error: --seed must be non-negative", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
