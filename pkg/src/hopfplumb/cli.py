"""Command-line front end.

Exit codes: 0 success, 1 verification or classification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import NoRealRootError, UnresolvedError
from .invariants import alexander, homological_monodromy, knot_signature, levine_tristram, lt_grid
from .linalg import determinant, load_matrix
from .plumbing import seifert_family
from .records import enclosure_to_dict, family_record, family_table, rows_to_csv, rows_to_json, rows_to_pretty
from .thurston import DEFAULT_TOL, thurston_classify
from .verify import lt_csv, run_verification


class InputError(Exception):
    pass


def _tol(s: str) -> Fraction:
    try:
        t = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid tolerance {s!r}") from None
    if t <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return t


def _convention(s: str) -> int:
    if s not in ("-1", "1", "+1"):
        raise argparse.ArgumentTypeError("convention must be -1 or +1")
    return int(s)


def _genus(g: int, n: int):
    if g < 2:
        raise InputError(f"genus must be at least 2, got {g}")
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")


def cmd_family(args, out) -> int:
    _genus(args.genus, args.n)
    rec = family_record(args.genus, args.n, args.tol, args.convention)
    out.write((rec.to_json() if args.format == "json" else rec.to_pretty()) + "\n")
    return 0


def cmd_family_table(args, out) -> int:
    _genus(args.genus, args.n_max)
    rows = family_table(args.genus, args.n_max, args.tol, args.convention)
    if args.format == "csv":
        out.write(rows_to_csv(rows))
    elif args.format == "json":
        out.write(rows_to_json(rows) + "\n")
    else:
        out.write(rows_to_pretty(rows) + "\n")
    return 0


def _read_matrix(path):
    try:
        return load_matrix(path)
    except (OSError, ValueError, TypeError) as exc:
        raise InputError(f"cannot read matrix file {path}: {exc}") from None


def cmd_thurston(args, out) -> int:
    if not args.assume_filling:
        raise InputError("--assume-filling is required: the construction presumes filling, connected multicurves")
    N = _read_matrix(args.matrix_file)
    try:
        r = thurston_classify(N, args.tol, assume_filling=True)
    except (UnresolvedError, NoRealRootError) as exc:
        sys.stderr.write(f"unresolved: {exc}\n")
        return 1
    except ValueError as exc:
        raise InputError(str(exc)) from None
    payload = {
        "N": N.tolist(),
        "assume_filling": r.assume_filling,
        "classification": r.classification,
        "mu": enclosure_to_dict(r.mu),
        "trace": enclosure_to_dict(r.trace),
        "lambda_abs": enclosure_to_dict(r.lambda_abs),
    }
    out.write(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_invariants(args, out) -> int:
    A = _read_matrix(args.matrix_file)
    if not A.is_square:
        raise InputError("Seifert matrix must be square")
    payload = {
        "seifert": A.tolist(),
        "determinant": determinant(A),
        "alexander": [list(p) for p in alexander(A).to_pairs()],
        "signature": knot_signature(A),
    }
    if abs(payload["determinant"]) == 1:
        mono = homological_monodromy(A, args.order_cap)
        payload["monodromy"] = mono.M.tolist()
        payload["monodromy_order"] = mono.order_label
    else:
        payload["monodromy"] = "n/a"
        payload["monodromy_order"] = "n/a"
    payload["levine_tristram"] = [
        {"theta_over_pi": str(s.theta), "signature": s.signature, "degenerate": s.degenerate}
        for s in levine_tristram(A, lt_grid(args.samples))
    ]
    out.write(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_lt_signature(args, out) -> int:
    _genus(args.genus, args.n)
    if args.samples < 2:
        raise InputError("--samples must be at least 2")
    out.write(lt_csv(seifert_family(args.genus, args.n, args.convention), args.samples))
    return 0


def cmd_verify(args, out, seifert=seifert_family) -> int:
    if args.g_max < 2:
        raise InputError("--g-max must be at least 2")
    if args.n_max < 1:
        raise InputError("--n-max must be at least 1")
    report = run_verification(args.g_max, args.n_max, args.tol, seifert=seifert)
    out.write("\n".join(report.lines()) + "\n")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfplumb", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, tol=True, convention=True):
        if tol:
            sp.add_argument("--tol", type=_tol, default=DEFAULT_TOL, help="enclosure width (default 1e-9)")
        if convention:
            sp.add_argument("--convention", type=_convention, default=-1,
                            help="self-linking of a positive Hopf band core (-1 or +1)")

    sp = sub.add_parser("family", help="invariant record for one (g, n)")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=("json", "pretty"), default="json")
    common(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("family-table", help="one row per n = 0..n_max")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--format", choices=("csv", "json", "pretty"), default="csv")
    common(sp)
    sp.set_defaults(func=cmd_family_table)

    sp = sub.add_parser("thurston", help="classify from an intersection-matrix file")
    sp.add_argument("matrix_file")
    sp.add_argument("--assume-filling", action="store_true")
    common(sp, convention=False)
    sp.set_defaults(func=cmd_thurston)

    sp = sub.add_parser("invariants", help="invariants of a Seifert-matrix file")
    sp.add_argument("matrix_file")
    sp.add_argument("--order-cap", type=int, default=None)
    sp.add_argument("--samples", type=int, default=64)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("lt-signature", help="Levine-Tristram signatures on a uniform grid")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--samples", type=int, default=64)
    common(sp, tol=False)
    sp.set_defaults(func=cmd_lt_signature)

    sp = sub.add_parser("verify", help="re-check every claim about the family")
    sp.add_argument("--g-max", type=int, default=4)
    sp.add_argument("--n-max", type=int, default=5)
    common(sp, convention=False)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None, seifert=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.func is cmd_verify and seifert is not None:
            return cmd_verify(args, out, seifert)
        return args.func(args, out)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
