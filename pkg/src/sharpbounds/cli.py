"""Command-line front end.

Subcommands: verify (chain sweeps, optional interval certification),
compare (two-bound sharpness), audit (printed-vs-corrected
classification), constants (the series table and partial-sum checks) and
bench (evaluation timings). Exit codes: 0 success / verified, 1 a
violation or failed check was found, 2 usage error.

Reports are emitted as a single JSON document or as flat CSV rows
(columns chain, variant, pair, x, alpha, lhs, rhs, gap, with lhs/rhs the
log-domain member values so that gap = rhs - lhs reproduces exactly).
Repeated runs are byte-identical apart from the timestamp and wall-time
fields.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .catalog import BOUND_SPECS, Bound, Variant, eval_bound, member_log_values
from .chains import CHAIN_IDS, ChainSpec, get_chain
from .constants import SERIES, zeta_constants
from .errors import SharpBoundsError
from .oracle import partial_sum_check
from .targets import PRODUCT_FORMS, Target, eval_target
from .verifier import (
    ChainReport,
    Mode,
    SweepConfig,
    discrepancy_audit,
    sharpness,
    sweep_chain,
)

_FLOAT_FMT = "%.17g"


def _fmt(x) -> str:
    if x is None:
        return ""
    return _FLOAT_FMT % x


def _envelope(command: str, config: dict) -> dict:
    return {
        "tool": {"name": "sharpbounds", "version": __version__},
        "command": command,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "config": config,
    }


def _write_out(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _variant_arg(name: str) -> Variant:
    return Variant.AS_PRINTED if name == "printed" else Variant.DERIVATION_CONSISTENT


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _chain_selection(parser, chain_arg: str, variant_arg: str) -> list[ChainSpec]:
    ids = list(CHAIN_IDS) if chain_arg == "all" else [chain_arg]
    specs: list[ChainSpec] = []
    for cid in ids:
        if cid not in CHAIN_IDS:
            parser.error(f"unknown chain {cid!r} (expected C1..C7 or 'all')")
        if variant_arg in ("corrected", "both"):
            specs.append(get_chain(cid, Variant.DERIVATION_CONSISTENT))
        if variant_arg == "printed" or variant_arg == "both":
            try:
                specs.append(get_chain(cid, Variant.AS_PRINTED))
            except SharpBoundsError:
                if variant_arg == "printed":
                    parser.error(f"chain {cid} has no printed variant")
    return specs


def _parse_alphas(parser, text: str) -> tuple[float, ...] | None:
    if text == "auto":
        return None
    try:
        return tuple(float(t) for t in text.split(","))
    except ValueError:
        parser.error(f"--alphas expects 'auto' or a comma-separated float list, got {text!r}")


def _report_to_dict(report: ChainReport) -> dict:
    doc = {
        "chain": report.chain,
        "variant": report.variant,
        "mode": report.mode,
        "grid": report.grid,
        "tol": report.tol,
        "alphas": list(report.alphas) if report.alphas else None,
        "violations": report.violation_count,
        "pairs": [
            {
                "pair": p.pair,
                "min_gap": p.min_gap,
                "argmin_x": p.argmin_x,
                "argmin_alpha": p.argmin_alpha,
                "violation_count": p.violation_count,
                "violation_samples": [asdict(v) for v in p.violations],
            }
            for p in report.pairs
        ],
        "certified_fraction": report.certified_fraction,
        "certify_status": report.certify_status,
        "timing": {"wall_time_s": report.wall_time},
    }
    return doc


def _member_logs_at(spec: ChainSpec, pair_index: int, x: float, alpha: float | None):
    lhs = float(member_log_values(spec.target, spec.members[pair_index], x, alpha, spec.variant))
    rhs = float(member_log_values(spec.target, spec.members[pair_index + 1], x, alpha, spec.variant))
    return lhs, rhs


def _verify_csv(specs_reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["chain", "variant", "pair", "x", "alpha", "lhs", "rhs", "gap"])
    for spec, report in specs_reports:
        for i, pair in enumerate(report.pairs):
            rows = [(pair.argmin_x, pair.argmin_alpha)]
            rows += [(v.x, v.alpha) for v in pair.violations]
            for x, alpha in rows:
                lhs, rhs = _member_logs_at(spec, i, x, alpha)
                writer.writerow([
                    report.chain, report.variant, pair.pair,
                    _fmt(x), _fmt(alpha), _fmt(lhs), _fmt(rhs), _fmt(rhs - lhs),
                ])
    return buf.getvalue()


def cmd_verify(args, parser) -> int:
    specs = _chain_selection(parser, args.chain, args.variant)
    alphas = _parse_alphas(parser, args.alphas)
    pairs = []
    for spec in specs:
        config = SweepConfig(
            chain=spec.chain_id,
            variant=spec.variant,
            grid=args.grid,
            alpha_samples=args.alpha_samples,
            alphas=alphas if spec.alpha_based else None,
            refine_depth=args.refine_depth,
            tol=args.tol,
            mode=Mode(args.mode),
            max_boxes=args.max_boxes,
        )
        pairs.append((spec, sweep_chain(spec, config)))

    failed = any(
        r.violation_count > 0 or r.certify_status == "FALSIFIED" for _, r in pairs)
    if args.emit == "csv":
        _write_out(_verify_csv(pairs), args.out)
    else:
        doc = _envelope("verify", {
            "chain": args.chain, "variant": args.variant, "grid": args.grid,
            "alphas": args.alphas, "alpha_samples": args.alpha_samples,
            "tol": args.tol, "mode": args.mode, "refine_depth": args.refine_depth,
            "max_boxes": args.max_boxes,
        })
        doc["reports"] = [_report_to_dict(r) for _, r in pairs]
        _write_out(json.dumps(doc, indent=2), args.out)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# compare / audit / constants / bench
# ---------------------------------------------------------------------------

def cmd_compare(args, parser) -> int:
    try:
        a = Bound[args.a]
        b = Bound[args.b]
    except KeyError as exc:
        parser.error(f"unknown bound id {exc.args[0]!r} (expected B1..B18)")
    try:
        lo, hi = (float(t) for t in args.domain.split(","))
    except ValueError:
        parser.error(f"--domain expects 'lo,hi', got {args.domain!r}")
    report = sharpness(
        a, b, (lo, hi), grid=args.grid, alpha=args.alpha,
        variant_a=_variant_arg(args.variant_a), variant_b=_variant_arg(args.variant_b))
    doc = _envelope("compare", {
        "a": args.a, "b": args.b, "domain": [lo, hi], "grid": args.grid,
        "alpha": args.alpha, "variant_a": args.variant_a, "variant_b": args.variant_b,
    })
    doc["report"] = asdict(report)
    doc["report"]["winner"] = report.winner
    _write_out(json.dumps(doc, indent=2), args.out)
    return 0


def cmd_audit(args, parser) -> int:
    config = SweepConfig(grid=args.grid, tol=args.tol, max_boxes=args.max_boxes)
    report = discrepancy_audit(config)
    doc = _envelope("audit", {"grid": args.grid, "tol": args.tol,
                              "max_boxes": args.max_boxes})
    doc["rows"] = [asdict(row) for row in report.rows]
    _write_out(json.dumps(doc, indent=2), args.out)
    return 0


def cmd_constants(args, parser) -> int:
    table = zeta_constants()
    rows = []
    ok = True
    for key, spec in SERIES.items():
        row = {"name": key, "formula": spec.formula, "value": getattr(table, key)}
        if args.check_partial_sums:
            partial, residual = partial_sum_check(key, args.check_partial_sums)
            gap = getattr(table, key) - partial
            row.update({
                "n": args.check_partial_sums, "partial": partial,
                "residual_bound": residual, "closed_minus_partial": gap,
                "ok": bool(0.0 < gap <= residual),
            })
            ok = ok and row["ok"]
        rows.append(row)
    if args.emit == "json":
        doc = _envelope("constants", {"check_partial_sums": args.check_partial_sums})
        doc["rows"] = rows
        _write_out(json.dumps(doc, indent=2), args.out)
    else:
        lines = []
        for row in rows:
            line = f"{row['name']:6s} {_fmt(row['value'])}  ({row['formula']})"
            if args.check_partial_sums:
                line += (f"  partial[{row['n']}]={_fmt(row['partial'])}"
                         f" residual<={_fmt(row['residual_bound'])}"
                         f" {'ok' if row['ok'] else 'FAIL'}")
            lines.append(line)
        _write_out("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def _bench_points(form, alpha: float | None, k: int) -> np.ndarray:
    hi = alpha if alpha is not None else form.sup_x
    return np.linspace(0.05 * hi, 0.95 * hi, k)


def cmd_bench(args, parser) -> int:
    rows = []
    for bound in Bound:
        spec = BOUND_SPECS[bound]
        form = PRODUCT_FORMS[spec.target]
        alpha = 0.6 * spec.alpha_sup if spec.alpha_based else None
        xs = [float(x) for x in _bench_points(form, alpha, args.points)]
        for _ in range(args.warmup):
            for x in xs:
                eval_bound(bound, x, alpha)
        t0 = time.perf_counter_ns()
        for _ in range(args.reps):
            for x in xs:
                eval_bound(bound, x, alpha)
        dt = time.perf_counter_ns() - t0
        rows.append({"kind": "bound", "id": bound.name,
                     "ns_per_eval": dt / (args.reps * len(xs))})
    for target in Target:
        form = PRODUCT_FORMS[target]
        xs = [float(x) for x in _bench_points(form, None, args.points)]
        for _ in range(args.warmup):
            for x in xs:
                eval_target(target, x)
        t0 = time.perf_counter_ns()
        for _ in range(args.reps):
            for x in xs:
                eval_target(target, x)
        dt = time.perf_counter_ns() - t0
        rows.append({"kind": "target", "id": target.name,
                     "ns_per_eval": dt / (args.reps * len(xs))})
    if args.emit == "json":
        doc = _envelope("bench", {"reps": args.reps, "warmup": args.warmup,
                                  "points": args.points})
        doc["rows"] = rows
        _write_out(json.dumps(doc, indent=2), args.out)
    else:
        lines = [f"{r['kind']:6s} {r['id']:16s} {r['ns_per_eval']:10.1f} ns/eval"
                 for r in rows]
        _write_out("\n".join(lines) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sharpbounds",
        description="Verify, compare and audit sharp exponential-type bounds "
                    "for circular and hyperbolic functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="sweep one or all inequality chains")
    p.add_argument("--chain", default="all", help="C1..C7 or 'all'")
    p.add_argument("--variant", default="corrected",
                   choices=["corrected", "printed", "both"])
    p.add_argument("--grid", type=int, default=100_000)
    p.add_argument("--alphas", default="auto",
                   help="'auto' or comma-separated anchor values")
    p.add_argument("--alpha-samples", type=int, default=20)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--mode", default="float", choices=["float", "interval"])
    p.add_argument("--refine-depth", type=int, default=3)
    p.add_argument("--max-boxes", type=int, default=20_000)
    p.add_argument("--emit", default="json", choices=["json", "csv"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="pointwise sharpness of two bounds")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--domain", required=True, help="lo,hi")
    p.add_argument("--grid", type=int, default=10_000)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--variant-a", default="corrected", choices=["corrected", "printed"])
    p.add_argument("--variant-b", default="corrected", choices=["corrected", "printed"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("audit", help="classify printed vs corrected dual forms")
    p.add_argument("--grid", type=int, default=100_000)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-boxes", type=int, default=20_000)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("constants", help="print the series constants table")
    p.add_argument("--check-partial-sums", type=int, default=None, metavar="N")
    p.add_argument("--emit", default="text", choices=["text", "json"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("bench", help="nanoseconds per evaluation for each id")
    p.add_argument("--reps", type=int, default=100)
    p.add_argument("--warmup", type=int, default=10)
    p.add_argument("--points", type=int, default=64)
    p.add_argument("--emit", default="text", choices=["text", "json"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except SharpBoundsError as exc:
        print(f"sharpbounds: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
