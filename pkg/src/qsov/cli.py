"""Command-line front end: compute tables, factorize, run verification suites.

Exact rationals are serialized as "num" or "num/den" strings and monomial
keys as "a,b", so identical flags produce identical JSON (modulo the
elapsed_ms timing field of suite reports).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import macdonald, qpoly, sov, suites
from .errors import QsovError
from .exact import Pair, QContext, frac, rational_str


def _context_from(args) -> QContext:
    return QContext(s=frac(args.s), g=args.g, xi=frac(args.xi))


def _emit(payload, args) -> None:
    if getattr(args, "format", "json") == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["key", "value"])
        for k, v in payload.items():
            writer.writerow([k, v])
        text = buf.getvalue()
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _poly1_table(poly) -> dict:
    return {str(k): rational_str(v) for k, v in sorted(poly.c.items())}


def _poly2_table(poly) -> dict:
    return {f"{a},{b}": rational_str(v) for (a, b), v in sorted(poly.c.items())}


def cmd_compute(args) -> int:
    ctx = _context_from(args)
    kind = args.kind
    if kind == "cpoly":
        beta = {"t": ctx.t, "q": ctx.q}.get(args.beta, None)
        if beta is None:
            beta = frac(args.beta)
        poly = qpoly.cq_sum(args.n, beta, ctx)
        _emit(_poly1_table(poly), args)
    elif kind == "macdonald":
        lam = Pair.parse(args.lam)
        table = {}
        for nu1 in range(lam.l1, lam.total // 2 + 1):
            nu = Pair(nu1, lam.total - nu1)
            table[str(nu)] = rational_str(macdonald.u_coeff(lam, nu, ctx))
        _emit(table, args)
    elif kind == "separated":
        lam = Pair.parse(args.lam)
        _emit(_poly1_table(macdonald.separated_poly(lam, ctx).poly), args)
    elif kind == "basis":
        nu = Pair.parse(args.nu)
        _emit(_poly2_table(sov.basis(args.basis, nu, ctx)), args)
    elif kind == "transition":
        lam = Pair.parse(args.lam)
        row = sov.transition_row(args.row_kind, lam, ctx)
        _emit({str(nu): rational_str(v) for nu, v in sorted(row.entries.items(),
              key=lambda kv: (kv[0].l1, kv[0].l2))}, args)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(kind)
    return 0


def cmd_factorize(args) -> int:
    ctx = _context_from(args)
    lam = Pair.parse(args.lam)
    try:
        image = sov.separate(lam, ctx)
    except QsovError as exc:
        _emit({"lam": str(lam), "verified": False, "witness": str(exc)}, args)
        return 1
    payload = {
        "lam": str(lam),
        "c": rational_str(image.c),
        "f": _poly1_table(image.f.poly),
        "verified": True,
    }
    _emit(payload, args)
    return 0


def cmd_verify(args) -> int:
    report = suites.run_suite(
        args.suite,
        s_values=tuple(args.s) if args.s else suites.DEFAULT_S,
        g_values=tuple(args.g) if args.g else suites.DEFAULT_G,
        xi_values=tuple(args.xi) if args.xi else suites.DEFAULT_XI,
        lmax=args.lmax,
        quad_points=args.quad_points,
        tol_tight=args.tol_tight,
        tol_loose=args.tol_loose,
        seed=args.seed,
        workers=args.workers,
    )
    if args.json:
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        lines = []
        for case in report["cases"]:
            if case["status"] == "pass":
                residual = case.get("residual")
                extra = f"  residual={residual:.3e}" if residual is not None else ""
                lines.append(f"PASS {case['id']}{extra}")
            else:
                lines.append(f"FAIL {case['id']}  [{case['paper_eq']}]  {case['witness']}")
        passed = sum(1 for c in report["cases"] if c["status"] == "pass")
        lines.append(
            f"{report['status'].upper()}: {passed}/{len(report['cases'])} cases,"
            f" {report['elapsed_ms']} ms"
        )
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["status"] == "pass" else 1


def _add_context_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--s", default="1/2", help="square root of the base q (rational)")
    parser.add_argument("--g", type=int, default=1, help="positive integer coupling")
    parser.add_argument("--xi", default="1", help="nonzero rational shift parameter")


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", default=None, help="write output to a file")
    parser.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsov",
        description="Exact separation machinery for two-variable symmetric "
        "Laurent polynomials, with numeric kernel verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="print coefficient tables")
    compute.add_argument(
        "kind", choices=("cpoly", "macdonald", "separated", "basis", "transition")
    )
    compute.add_argument("--n", type=int, default=0, help="degree for cpoly")
    compute.add_argument("--beta", default="t", help="cpoly parameter: t, q or a rational")
    compute.add_argument("--lam", default="0,0", help="label pair 'l1,l2'")
    compute.add_argument("--nu", default="0,0", help="basis label pair")
    compute.add_argument("--basis", choices=("p", "r", "pt", "rt"), default="p")
    compute.add_argument(
        "--kind",
        dest="row_kind",
        choices=("pi", "rho", "Q", "R", "pit", "rhot", "Qt", "Rt"),
        default="rho",
        help="transition row kind",
    )
    _add_context_flags(compute)
    _add_output_flags(compute)
    compute.set_defaults(func=cmd_compute)

    factorize = sub.add_parser("factorize", help="apply the separating map to P_lam")
    factorize.add_argument("--lam", required=True)
    _add_context_flags(factorize)
    _add_output_flags(factorize)
    factorize.set_defaults(func=cmd_factorize)

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument("suite", choices=suites.SUITE_NAMES + ("all",))
    verify.add_argument("--s", action="append", help="grid value for s (repeatable)")
    verify.add_argument("--g", action="append", type=int, help="grid value for g")
    verify.add_argument("--xi", action="append", help="grid value for xi")
    verify.add_argument("--lmax", type=int, default=6, help="label bound for exact grids")
    verify.add_argument("--quad-points", type=int, default=2048)
    verify.add_argument("--tol-tight", type=float, default=1e-10)
    verify.add_argument("--tol-loose", type=float, default=1e-6)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--workers", type=int, default=1)
    verify.add_argument("--json", action="store_true", help="emit the JSON report")
    verify.add_argument("--out", default=None)
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QsovError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
