"""Command-line frontend.

Subcommands: bound, elliptic, torus-det, table, verify-claims.
Exit codes: 0 ok, 1 audit/tolerance failure, 2 usage or domain error,
3 numeric non-convergence.  Set ATL_PRECISION to override the default
rel_tol (1e-12).  All output is deterministic for fixed flags; numbers are
printed with 12 significant digits, '.' decimal point, no grouping.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import bounds, claims, elliptic, torus
from .numerics import ConvergenceError, Precision, UpperHalfPoint

TABLE_COLUMNS = (
    "genus", "heat_term", "csel_lower", "log_area_bound", "a_g",
    "e_g_refined", "upper_exact", "upper_simplified", "paper_value", "delta",
)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _parse_tau(text: str, parser: argparse.ArgumentParser) -> UpperHalfPoint:
    parts = text.split(",")
    if len(parts) != 2:
        parser.error(f"--tau must be 'x,y' with two decimal literals, got {text!r}")
    try:
        x, y = float(parts[0]), float(parts[1])
    except ValueError:
        parser.error(f"--tau must be 'x,y' with two decimal literals, got {text!r}")
    if y <= 0.0:
        parser.error(f"--tau requires y > 0, got y = {parts[1]}")
    return UpperHalfPoint(x, y)


def _precision_from_env(parser: argparse.ArgumentParser) -> Precision:
    raw = os.environ.get("ATL_PRECISION")
    if raw is None:
        return Precision()
    try:
        return Precision(rel_tol=float(raw))
    except ValueError:
        parser.error(f"ATL_PRECISION must be a positive float, got {raw!r}")


def _cmd_bound(args, parser, prec) -> int:
    if args.genus < 2:
        parser.error("bound requires --genus >= 2; for genus 1 use `atlab elliptic`")
    bd = bounds.upper_bound_logdet(args.genus, args.form, args.area)
    headline = bd.upper_exact if args.form == "exact" else bd.upper_simplified
    if args.json:
        payload = bd.as_dict()
        payload["form"] = args.form
        payload["upper_bound"] = headline
        print(json.dumps(payload, indent=2))
        return 0
    print(f"genus {bd.genus} upper bound on log det ({args.form}, {args.area}): "
          f"{_fmt(headline)}")
    for key, value in bd.as_dict().items():
        if key == "genus":
            continue
        print(f"  {key:30s} {_fmt(value)}")
    return 0


def _cmd_elliptic(args, parser, prec) -> int:
    tau = _parse_tau(args.tau, parser)
    logdet = elliptic.arakelov_logdet(tau, prec)
    bound = elliptic.elliptic_upper_bound_log(tau)
    payload = {
        "tau": {"x": tau.x, "y": tau.y},
        "arakelov_area": elliptic.arakelov_area(tau, prec),
        "log_arakelov_area": elliptic.log_arakelov_area(tau, prec),
        "arakelov_logdet": logdet,
        "d_ar": elliptic.d_ar_elliptic(tau, prec),
        "upper_bound_log": bound,
        "bound_slack": bound - logdet,
    }
    if args.json:
        print(json.dumps(payload, indent=2))
        return 0
    for key, value in payload.items():
        print(f"{key:20s} {_fmt(value) if not isinstance(value, dict) else value}")
    return 0


def _cmd_torus_det(args, parser, prec) -> int:
    tau = _parse_tau(args.tau, parser)
    if args.tol <= 0.0:
        parser.error(f"--tol must be positive, got {args.tol}")
    if args.method == "closed":
        print(f"logdet_closed  {_fmt(torus.logdet_closed(tau, prec))}")
        return 0
    try:
        if args.method == "oracle":
            value = torus.logdet_oracle(torus.UnitTorus(tau), prec)
            print(f"logdet_oracle  {_fmt(value)}")
            return 0
        cmp = torus.compare_logdet(tau, prec)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(f"logdet_closed  {_fmt(cmp.logdet_closed)}")
    print(f"logdet_oracle  {_fmt(cmp.logdet_oracle)}")
    print(f"difference     {_fmt(cmp.difference)}")
    if abs(cmp.difference) > args.tol:
        print(f"FAIL |difference| > {_fmt(args.tol)}", file=sys.stderr)
        return 1
    return 0


def _table_row_dict(row: bounds.TableRow) -> dict:
    bd = row.breakdown
    return {
        "genus": bd.genus,
        "heat_term": bd.heat_term,
        "csel_lower": bd.csel_lower,
        "log_area_bound": bd.log_area_bound,
        "a_g": bd.a_g,
        "e_g_refined": bd.e_g_refined,
        "upper_exact": bd.upper_exact,
        "upper_simplified": bd.upper_simplified,
        "paper_value": row.paper_value,
        "delta": row.delta,
    }


def _cmd_table(args, parser, prec) -> int:
    if not 2 <= args.g_from <= args.g_to:
        parser.error("need 2 <= --from <= --to")
    rows = bounds.table(args.g_from, args.g_to, args.form, args.area)
    dicts = [_table_row_dict(row) for row in rows]
    if args.csv:
        try:
            with open(args.csv, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(TABLE_COLUMNS)
                for d in dicts:
                    writer.writerow([_fmt(d[col]) for col in TABLE_COLUMNS])
        except OSError as exc:
            parser.error(f"cannot write {args.csv}: {exc}")
        return 0
    if args.json:
        try:
            with open(args.json, "w") as fh:
                json.dump(dicts, fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            parser.error(f"cannot write {args.json}: {exc}")
        return 0
    header = "  ".join(f"{c:>16s}" for c in TABLE_COLUMNS)
    print(header)
    for d, row in zip(dicts, rows):
        line = "  ".join(f"{_fmt(d[c]):>16s}" for c in TABLE_COLUMNS)
        if row.annotation:
            line += f"  # {row.annotation}"
        print(line)
    return 0


def _cmd_verify_claims(args, parser, prec) -> int:
    only = None
    if args.only:
        only = [cid.strip() for cid in args.only.split(",") if cid.strip()]
    try:
        report = claims.run_all(prec, only=only)
    except KeyError as exc:
        parser.error(str(exc.args[0]))
    for rec in report.records:
        delta = "" if rec.delta is None else f"  delta={_fmt(rec.delta)}"
        print(f"{rec.id:18s} {rec.status:10s} [{rec.location}] "
              f"computed={_fmt(rec.computed)}{delta}")
    for warning in report.warnings:
        print(f"warning: {warning}")
    summary = report.summary
    print("summary: " + "  ".join(f"{k}={v}" for k, v in summary.items()))
    if args.json:
        try:
            with open(args.json, "w") as fh:
                fh.write(report.to_json())
                fh.write("\n")
        except OSError as exc:
            parser.error(f"cannot write {args.json}: {exc}")
    if args.strict and not report.strict_ok():
        print("strict: non-allowlisted discrepancies present", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atlab",
        description=(
            "Flat-torus determinants, genus-1 Arakelov invariants, effective "
            "log det bounds for g > 1, and the numeric claim audit.  "
            "Set ATL_PRECISION to override the default rel_tol."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="genus-g upper bound breakdown (g >= 2)")
    p_bound.add_argument("--genus", type=int, required=True)
    p_bound.add_argument("--form", choices=bounds.BOUND_FORMS, default="exact")
    p_bound.add_argument("--area", choices=bounds.AREA_VARIANTS, default="c36")
    p_bound.add_argument("--json", action="store_true")

    p_ell = sub.add_parser("elliptic", help="genus-1 Arakelov quantities at tau")
    p_ell.add_argument("--tau", required=True, metavar="X,Y",
                       help="tau = x + iy as two decimals 'x,y' (y > 0)")
    p_ell.add_argument("--json", action="store_true")

    p_det = sub.add_parser("torus-det", help="flat-torus log determinant")
    p_det.add_argument("--tau", required=True, metavar="X,Y",
                       help="tau = x + iy as two decimals 'x,y' (y > 0)")
    p_det.add_argument("--method", choices=("closed", "oracle", "both"),
                       default="both")
    p_det.add_argument("--tol", type=float, default=1e-6,
                       help="with --method both, exit 1 if |difference| > tol")

    p_table = sub.add_parser("table", help="per-genus bound table")
    p_table.add_argument("--from", dest="g_from", type=int, required=True)
    p_table.add_argument("--to", dest="g_to", type=int, required=True)
    p_table.add_argument("--form", choices=bounds.BOUND_FORMS, default="exact")
    p_table.add_argument("--area", choices=bounds.AREA_VARIANTS, default="c36")
    p_table.add_argument("--csv", metavar="PATH")
    p_table.add_argument("--json", metavar="PATH")

    p_claims = sub.add_parser("verify-claims", help="recompute the claim registry")
    p_claims.add_argument("--only", metavar="IDS",
                          help="comma-separated claim ids")
    p_claims.add_argument("--json", metavar="PATH")
    p_claims.add_argument("--strict", action="store_true",
                          help="exit 1 on non-allowlisted discrepancies")

    return parser


_COMMANDS = {
    "bound": _cmd_bound,
    "elliptic": _cmd_elliptic,
    "torus-det": _cmd_torus_det,
    "table": _cmd_table,
    "verify-claims": _cmd_verify_claims,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, parser, _precision_from_env(parser))
    except SystemExit as exc:  # argparse exits; normalize to a return code
        return int(exc.code or 0)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
