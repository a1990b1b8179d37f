"""Command-line front end.

Exit codes: 0 success, 1 usage error or size guard, 2 mathematical discrepancy.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import chern, homology, paths, verify
from .shapes import Partition, format_partition, parse_partition

EXIT_OK, EXIT_USAGE, EXIT_DISCREPANCY = 0, 1, 2

EXPAND_METHODS = ("auto", "direct", "alternating", "column", "row")
COEFF_METHODS = ("auto", "direct", "alternating", "column", "row", "single-row", "two-rows",
                 "fillings", "paths", "jacobi-trudi")
AUTO_CHECK_WEIGHT = 6


class UsageError(ValueError):
    pass


def _is_column(lam: Partition) -> bool:
    return all(x == 1 for x in lam)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _expand(lam: Partition, n: int, method: str):
    if method == "direct":
        return chern.sbar_direct(lam, n)
    if method == "alternating":
        return chern.sbar_alternating(lam, n)
    if method == "column":
        if not _is_column(lam):
            raise UsageError(f"method column needs lambda to be a single column, got {lam}")
        return chern.expand_column_case(lam.size, n)
    if method == "row":
        if len(lam) > 1:
            raise UsageError(f"method row needs lambda to be a single row, got {lam}")
        return chern.expand_row_case(lam.size, n)
    raise UsageError(f"unknown method {method!r}")


def _auto_method(lam: Partition) -> str:
    if len(lam) <= 1:
        return "row"
    if _is_column(lam):
        return "column"
    return "alternating"


def cmd_expand(args, out) -> int:
    lam = parse_partition(args.lam)
    method = args.method
    note = None
    if method == "auto":
        method = _auto_method(lam)
        if lam.size <= AUTO_CHECK_WEIGHT:
            if _expand(lam, args.n, method) != chern.sbar_direct(lam, args.n):
                print(f"discrepancy between {method} and direct for lambda={lam}, n={args.n}", file=sys.stderr)
                return EXIT_DISCREPANCY
            note = "cross-checked against direct"
    expansion = _expand(lam, args.n, method)
    if args.format == "tsv":
        out.write(expansion.to_tsv())
    else:
        doc = {"lambda": format_partition(lam), "n": args.n, "method": method, "expansion": expansion.to_json()}
        if note:
            doc["note"] = note
        out.write(_dump(doc))
    return EXIT_OK


def _coeff(lam: Partition, mu: Partition, n: int, method: str, p: int | None, variant: str | None) -> int:
    if method in ("auto", "direct"):
        return chern.sbar_direct(lam, n)[mu]
    if method == "alternating":
        return chern.coeff_alternating(lam, mu, n)
    if method in ("column", "row"):
        return _expand(lam, n, method)[mu]
    if method == "single-row":
        if len(mu) != 1:
            raise UsageError("method single-row needs mu to be a single row")
        return chern.coeff_single_row(lam, n)
    if method == "two-rows":
        if len(mu) > 2:
            raise UsageError("method two-rows needs mu to have at most two rows")
        return chern.coeff_two_rows(lam, mu.part(1), mu.part(2), n, "gpairs-literal" if variant == "printed" else "gpairs")
    if not _is_column(mu):
        raise UsageError(f"method {method} needs mu to be a single column")
    if method == "jacobi-trudi":
        return chern.coeff_column_jacobi_trudi(lam, n)
    p = len(lam) if p is None else p
    if method == "fillings":
        return chern.coeff_column(lam, n, p, variant or "corrected")
    if method == "paths":
        return paths.lgv_determinant(lam, p, n, variant or "split")
    raise UsageError(f"unknown method {method!r}")


def cmd_coeff(args, out) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    doc = {"lambda": format_partition(lam), "mu": format_partition(mu), "n": args.n, "method": args.method}
    if lam.size != mu.size:
        value = 0
        doc["note"] = "degree mismatch: |lambda| != |mu|"
    else:
        value = _coeff(lam, mu, args.n, args.method, args.p, args.variant)
    if args.format == "tsv":
        out.write(f"{format_partition(mu)}\t{value}\n")
    else:
        doc["coeff"] = str(value)
        out.write(_dump(doc))
    return EXIT_OK


def _complex_sizes(args) -> tuple[int, int]:
    if args.a is not None and args.m is not None:
        return args.a, args.m
    if args.k is None or args.n is None:
        raise UsageError("give --a and --m, or --k and --n")
    if args.kind == "column":
        if args.n < args.k:
            raise UsageError("column complex needs n >= k")
        return args.k, args.n - args.k + 1
    return args.k, args.n + args.k - 1


def cmd_homology(args, out) -> int:
    a, m = _complex_sizes(args)
    if a < 1 or m < 1:
        raise UsageError("|A| and |M| must be positive")
    report = homology.check_vanishing(args.kind, a, m, characters=args.characters)
    if args.format == "tsv":
        for i, (d, h) in enumerate(zip(report["dims"], report["homology"])):
            out.write(f"{i}\t{d}\t{h}\n")
    else:
        out.write(_dump(report))
    return EXIT_DISCREPANCY if report["status"] == "nonvanishing" else EXIT_OK


def cmd_paths(args, out) -> int:
    g = paths.PathGraph(args.n, args.variant or "split")
    if args.emit_dot:
        out.write(g.to_dot())
        return EXIT_OK
    if args.lam is None:
        table = [[str(paths.count_paths(g, a, b)) for b in range(1, args.n + 1)] for a in range(1, args.n + 1)]
        out.write(_dump({"n": args.n, "variant": g.variant, "counts": table}))
        return EXIT_OK
    lam = parse_partition(args.lam)
    p = len(lam) if args.p is None else args.p
    doc = {
        "lambda": format_partition(lam), "n": args.n, "p": p, "variant": g.variant,
        "matrix": [[str(x) for x in row] for row in paths.path_matrix(lam, p, args.n, g.variant)],
        "determinant": str(paths.lgv_determinant(lam, p, args.n, g.variant)),
    }
    if g.variant == "split":
        doc["fillings"] = [[list(r) for r in t.to_filling().rows] for t in paths.nonintersecting_tuples(lam, p, args.n)]
    out.write(_dump(doc))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    report = verify.run(args.suite, args.max_weight, args.max_vars, args.jobs)
    if args.format == "tsv":
        for f in report["findings"]:
            out.write(f"{f['kind']}\t{f['check']}\t{json.dumps(f['instance'], sort_keys=True)}\n")
    else:
        out.write(_dump(report))
    return EXIT_DISCREPANCY if report["status"] == "discrepancy" else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plethyx", description="Schur expansions of Chern plethysm polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "tsv"), default="json")

    p = sub.add_parser("expand", help="Schur expansion of sbar_lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=EXPAND_METHODS, default="auto")
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("coeff", help="one coefficient [s_mu] sbar_lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=COEFF_METHODS, default="auto")
    p.add_argument("--p", type=int)
    p.add_argument("--variant", choices=("corrected", "printed", "split"))
    common(p)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("homology", help="homology of a column or row complex")
    p.add_argument("kind", choices=homology.KINDS)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--characters", action="store_true", help="include the Frobenius characteristic of the top homology")
    common(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("paths", help="lattice path counts and determinants")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=paths.VARIANTS)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--p", type=int)
    p.add_argument("--emit-dot", action="store_true")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("verify", help="cross-route verification sweeps")
    p.add_argument("suite", choices=verify.SUITES + ("all",))
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--max-vars", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "n", None) is not None and args.n < 1:
        print("plethyx: --n must be positive", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "jobs", 1) < 1:
        print("plethyx: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (ValueError, homology.GuardExceeded) as exc:
        print(f"plethyx: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
