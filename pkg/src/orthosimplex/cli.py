"""Command-line interface: point evaluation, verification suites, tables.

Verification output is JSON lines behind a schema header object; with a
fixed ``--seed`` the byte stream is reproducible.  Exit codes: 0 success,
1 verification failure, 2 bad flags or violated preconditions.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import __version__
from .classical import hahn_eval, jacobi_eval
from .errors import OrthosimplexError
from .fourier import GParams, g_eval
from .hypergeom import eval_terminating
from .quadrature import gauss_jacobi, line_rule, rule_to_rows, simplex_rule
from .sfamily import SParams, s_eval
from .simplex import multi_indices, simplex_poly_eval
from .suites import SUITES

TOLERANCE_ENV = "ORTHOSIMPLEX_TOLERANCE"


def _floats(text: str):
    return tuple(float(v) for v in text.split(","))


def _ints(text: str):
    return tuple(int(v) for v in text.split(","))


def _complexes(text: str):
    return tuple(complex(v) for v in text.split(","))


def _format_value(value, precision: int) -> str:
    if isinstance(value, complex):
        if value.imag == 0.0:
            return f"{value.real:.{precision}g}"
        return f"({value.real:.{precision}g}, {value.imag:.{precision}g})"
    return f"{float(value):.{precision}g}"


def _cmd_eval(args) -> int:
    precision = args.precision
    if args.target == "jacobi":
        value = jacobi_eval(args.n, args.alpha, args.beta, args.x)
    elif args.target == "hahn":
        value = hahn_eval(args.n, args.a, args.b, args.c, args.d, args.x)
    elif args.target == "hyper":
        value = eval_terminating(_complexes(args.num), _complexes(args.den), complex(args.z))
    elif args.target == "simplex":
        value = simplex_poly_eval(_ints(args.n_vec), _floats(args.alpha_vec), _floats(args.x_vec))
    elif args.target == "g":
        n = _ints(args.n_vec)
        p = GParams(len(n), n, _floats(args.a_vec), _floats(args.alpha_vec))
        value = g_eval(p, _floats(args.x_vec))
    elif args.target == "sfun":
        n = _ints(args.n_vec)
        p = SParams(len(n), n, _floats(args.a_vec), _floats(args.b_vec))
        value = s_eval(p, _complexes(args.x_vec), form=args.form)
    else:  # pragma: no cover - argparse restricts choices
        raise OrthosimplexError(f"unknown eval target {args.target}")
    print(_format_value(value, precision))
    return 0


def _cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    kwargs = {}
    if args.tolerance is not None:
        kwargs["tolerance"] = args.tolerance
    if args.suite == "recurrence":
        if args.id:
            kwargs["ids"] = args.id
        if args.samples is not None:
            kwargs["samples"] = args.samples
        kwargs["brute_force"] = args.brute_force
    if args.suite == "orthogonality":
        if args.r:
            kwargs["rs"] = tuple(args.r)
        if args.max_degree is not None:
            kwargs["max_degree"] = args.max_degree
    if args.suite in ("fourier", "sfamily") and args.r:
        kwargs["rs"] = tuple(args.r)
    if args.suite == "all" and args.tolerance is not None:
        kwargs = {name: {"tolerance": args.tolerance} for name in ("orthogonality", "fourier", "sfamily", "recurrence")}
        reports = suite(args.seed, **kwargs)
    else:
        reports = suite(args.seed, **kwargs)
    out = sys.stdout
    print(json.dumps({"schema": 1, "tool": "orthosimplex", "version": __version__,
                      "suite": args.suite, "seed": args.seed}, separators=(", ", ": ")), file=out)
    passed = failed = 0
    errata = 0
    for report in reports:
        print(report.to_json(include_runtime=args.timings), file=out)
        if report.identity_id.startswith("recurrence-erratum-"):
            errata += 1
        if report.passed:
            passed += 1
        else:
            failed += 1
    summary = {"summary": True, "passed": passed, "failed": failed, "errata": errata}
    print(json.dumps(summary, separators=(", ", ": ")), file=out)
    return 0 if failed == 0 else 1


def _write_rows(rows, header, args) -> None:
    if args.format == "csv":
        sink = open(args.out, "w", newline="") if args.out else sys.stdout
        try:
            writer = csv.writer(sink)
            writer.writerow(header)
            writer.writerows(rows)
        finally:
            if args.out:
                sink.close()
    else:
        payload = [dict(zip(header, row)) for row in rows]
        text = json.dumps(payload, separators=(", ", ": "))
        if args.out:
            with open(args.out, "w") as sink:
                sink.write(text + "\n")
        else:
            print(text)


def _cmd_table(args) -> int:
    if args.target == "simplex":
        alpha = _floats(args.alpha_vec)
        r = len(alpha) - 1
        indices = multi_indices(r, args.max_degree)
        spacing = args.spacing
        steps = int(round(1.0 / spacing))
        points = []
        for combo in np.ndindex(*([steps + 1] * r)):
            point = [c * spacing for c in combo]
            if sum(point) <= 1.0 + 1e-12:
                points.append(point)
        pts = np.asarray(points)
        header = [f"x{i + 1}" for i in range(r)] + ["b_" + "_".join(map(str, n)) for n in indices]
        columns = [simplex_poly_eval(n, alpha, pts) for n in indices]
        rows = [[*pts[i].tolist(), *(float(col[i]) for col in columns)] for i in range(len(pts))]
        _write_rows(rows, header, args)
    elif args.target == "hahn":
        xs = np.arange(args.x_min, args.x_max + 0.5 * args.x_step, args.x_step)
        header = ["x"]
        for n in range(args.max_degree + 1):
            header += [f"p{n}_re", f"p{n}_im"]
        rows = []
        for x in xs:
            row = [float(x)]
            for n in range(args.max_degree + 1):
                value = hahn_eval(n, args.a, args.b, args.c, args.d, float(x))
                row += [value.real, value.imag]
            rows.append(row)
        _write_rows(rows, header, args)
    elif args.target == "g":
        n = _ints(args.n_vec)
        p = GParams(len(n), n, _floats(args.a_vec), _floats(args.alpha_vec))
        xs = np.arange(args.x_min, args.x_max + 0.5 * args.x_step, args.x_step)
        if p.r != 1:
            raise OrthosimplexError("g tables are one-dimensional; use r = 1 parameters")
        rows = [[float(x), float(g_eval(p, [float(x)]))] for x in xs]
        _write_rows(rows, ["x", "g"], args)
    elif args.target == "rule":
        if args.domain == "interval":
            rule = gauss_jacobi(args.npoints, args.alpha, args.beta)
            header = ["x", "weight"]
        elif args.domain == "simplex":
            alpha = _floats(args.alpha_vec)
            rule = simplex_rule(len(alpha) - 1, args.degree, alpha)
            header = [f"x{i + 1}" for i in range(len(alpha) - 1)] + ["weight"]
        else:
            rule = line_rule(args.decay_rate, args.tolerance or 1e-10)
            header = ["x", "weight"]
        _write_rows(list(rule_to_rows(rule)), header, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthosimplex",
        description="Evaluate and verify simplex orthogonal polynomials, their Fourier "
        "transforms, and the Gamma-weighted orthogonal family.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one function at one point")
    ev_sub = ev.add_subparsers(dest="target", required=True)

    jac = ev_sub.add_parser("jacobi")
    jac.add_argument("--n", type=int, required=True)
    jac.add_argument("--alpha", type=float, required=True)
    jac.add_argument("--beta", type=float, required=True)
    jac.add_argument("--x", type=float, required=True)

    hahn = ev_sub.add_parser("hahn")
    for flag in ("--a", "--b", "--c", "--d"):
        hahn.add_argument(flag, type=float, required=True)
    hahn.add_argument("--n", type=int, required=True)
    hahn.add_argument("--x", type=float, required=True)

    hyper = ev_sub.add_parser("hyper")
    hyper.add_argument("--num", required=True, help="comma-separated numerator parameters")
    hyper.add_argument("--den", required=True, help="comma-separated denominator parameters")
    hyper.add_argument("--z", default="1", help="argument (complex accepted)")

    simp = ev_sub.add_parser("simplex")
    simp.add_argument("--n", dest="n_vec", required=True, help="multi-index, e.g. 1,0")
    simp.add_argument("--alpha", dest="alpha_vec", required=True, help="r+1 exponents")
    simp.add_argument("--x", dest="x_vec", required=True, help="point, e.g. 0.2,0.3")

    gfun = ev_sub.add_parser("g")
    gfun.add_argument("--n", dest="n_vec", required=True)
    gfun.add_argument("--a", dest="a_vec", required=True)
    gfun.add_argument("--alpha", dest="alpha_vec", required=True)
    gfun.add_argument("--x", dest="x_vec", required=True)

    sfun = ev_sub.add_parser("sfun")
    sfun.add_argument("--r", type=int, default=None, help="dimension (inferred from --n)")
    sfun.add_argument("--n", dest="n_vec", required=True)
    sfun.add_argument("--a", dest="a_vec", required=True)
    sfun.add_argument("--b", dest="b_vec", required=True)
    sfun.add_argument("--x", dest="x_vec", required=True)
    sfun.add_argument("--form", choices=("3f2", "hahn"), default="3f2")

    for target in (jac, hahn, hyper, simp, gfun, sfun):
        target.add_argument("--precision", type=int, default=12)

    ver = sub.add_parser("verify", help="run a verification suite, emitting JSON lines")
    ver.add_argument("suite", choices=sorted(SUITES))
    ver.add_argument("--seed", type=int, default=1)
    default_tol = os.environ.get(TOLERANCE_ENV)
    ver.add_argument("--tolerance", type=float, default=float(default_tol) if default_tol else None)
    ver.add_argument("--samples", type=int, default=None)
    ver.add_argument("--id", action="append", help="restrict the recurrence suite to these ids")
    ver.add_argument("--brute-force", action="store_true")
    ver.add_argument("--timings", action="store_true", help="include runtime_ms (breaks byte-determinism)")
    ver.add_argument("--r", type=int, action="append", help="restrict dimensions (repeatable)")
    ver.add_argument("--max-degree", type=int, default=None)

    tab = sub.add_parser("table", help="emit evaluation tables / rule nodes as CSV or JSON")
    tab_sub = tab.add_subparsers(dest="target", required=True)

    tsimp = tab_sub.add_parser("simplex")
    tsimp.add_argument("--alpha", dest="alpha_vec", required=True)
    tsimp.add_argument("--max-degree", type=int, default=2)
    tsimp.add_argument("--spacing", type=float, default=0.1)

    thahn = tab_sub.add_parser("hahn")
    for flag in ("--a", "--b", "--c", "--d"):
        thahn.add_argument(flag, type=float, required=True)
    thahn.add_argument("--max-degree", type=int, default=3)
    thahn.add_argument("--x-min", type=float, default=-2.0)
    thahn.add_argument("--x-max", type=float, default=2.0)
    thahn.add_argument("--x-step", type=float, default=1.0)

    tg = tab_sub.add_parser("g")
    tg.add_argument("--n", dest="n_vec", required=True)
    tg.add_argument("--a", dest="a_vec", required=True)
    tg.add_argument("--alpha", dest="alpha_vec", required=True)
    tg.add_argument("--x-min", type=float, default=-3.0)
    tg.add_argument("--x-max", type=float, default=3.0)
    tg.add_argument("--x-step", type=float, default=0.25)

    trule = tab_sub.add_parser("rule")
    trule.add_argument("--domain", choices=("interval", "simplex", "real-line"), default="interval")
    trule.add_argument("--npoints", type=int, default=8)
    trule.add_argument("--alpha", type=float, default=0.0)
    trule.add_argument("--beta", type=float, default=0.0)
    trule.add_argument("--alpha-vec", dest="alpha_vec", default="0,0")
    trule.add_argument("--degree", type=int, default=4)
    trule.add_argument("--decay-rate", type=float, default=1.0)
    trule.add_argument("--tolerance", type=float, default=None)

    for target in (tsimp, thahn, tg, trule):
        target.add_argument("--format", choices=("csv", "json"), default="csv")
        target.add_argument("--out", default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "table":
            return _cmd_table(args)
    except OrthosimplexError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
