"""Command-line interface: ``posetgap <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .chains import compute_metrics
from .classify import classify
from .errors import PosetError, TheoremViolation
from .formats import (
    bounds_dict,
    classification_dict,
    delta_dict,
    export_dot,
    gap_report_dict,
    metrics_dict,
    parse_poset,
    serialize_poset_text,
)
from .gap import bounds, deletion_delta, gap
from .harness import Dedupe, EnumerationConfig, VerificationReport, check_poset, random_poset, verify_all


def _load(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_poset(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def cmd_analyze(args, out) -> int:
    p = _load(args.file)
    metrics = compute_metrics(p)
    report = gap(p, metrics)
    if args.json:
        print(_dump({"gap_report": gap_report_dict(report), "metrics": metrics_dict(p, metrics)}), file=out)
        return 0
    t = report.terms
    print(f"elements: {t.n}", file=out)
    print(f"maximal chains: {t.maxchains}", file=out)
    print(f"maximal elements: {t.maxx}", file=out)
    print(f"minimal elements: {t.minn}", file=out)
    print(f"Hasse edges: {t.edges}", file=out)
    print(f"chain polytope facets: {report.chain_facets} = {t.maxchains} + {t.n}", file=out)
    print(f"order polytope facets: {report.order_facets} = {t.maxx} + {t.minn} + {t.edges}", file=out)
    print(f"gap: {report.gap}", file=out)
    width = max([len(name) for name in p.names] + [7])
    print(f"{'element':<{width}}  {'uc':>6} {'dc':>6} {'crossing':>9}", file=out)
    for i, name in enumerate(p.names):
        print(f"{name:<{width}}  {metrics.uc[i]:>6} {metrics.dc[i]:>6} {metrics.crossing[i]:>9}", file=out)
    return 0


def cmd_classify(args, out) -> int:
    p = _load(args.file)
    c = classify(p)
    doc = classification_dict(p, c)
    if args.json:
        print(_dump(doc), file=out)
        return 0
    print(f"gap class: {doc['gap_class']}", file=out)
    print(f"gap: {doc['gap']}", file=out)
    w = doc["x_witness"]
    if w is not None:
        print(f"X witness: {w['a']}, {w['b']} < {w['c']} < {w['d']}, {w['e']}", file=out)
    s = doc["stalk"]
    if s is not None:
        print(f"stalk: {' < '.join(s['chain'])}", file=out)
        print(f"  covered by: {', '.join(s['up_pair'])}", file=out)
        print(f"  covers: {', '.join(s['down_pair'])}", file=out)
    return 0


def cmd_bounds(args, out) -> int:
    p = _load(args.file)
    reports = bounds(p, args.antichain_cap)
    if args.json:
        print(_dump([bounds_dict(p, b) for b in reports]), file=out)
    else:
        for b in reports:
            members = "{" + ", ".join(p.names[v] for v in b.antichain) + "}"
            verdict = "holds" if b.holds else "FAILS"
            print(f"{members}: {b.lower} <= {b.gap} <= {b.upper}  {verdict}", file=out)
    return 0 if all(b.holds for b in reports) else 1


def cmd_verify(args, out) -> int:
    cfg = EnumerationConfig(
        max_n=args.max_n,
        dedupe=Dedupe.CANONICAL if args.canonical else Dedupe.LABELED,
        workers=args.workers,
    )
    report = verify_all(cfg)
    print(_dump(report.to_dict()) if args.json else report.to_text(), file=out)
    return 0 if report.ok else 1


def cmd_random(args, out) -> int:
    report = VerificationReport()
    for k in range(args.count):
        seed = args.seed + k
        p = random_poset(args.n, args.p, seed)
        if args.check:
            check_poset(p, report, sample_seed=seed)
        else:
            print(f"# n={args.n} p={args.p} seed={seed}", file=out)
            print(serialize_poset_text(p), file=out)
    if args.check:
        print(report.finalize().to_text(), file=out)
        return 0 if report.ok else 1
    return 0


def cmd_export_dot(args, out) -> int:
    p = _load(args.file)
    out.write(export_dot(p, compute_metrics(p) if args.annotate else None))
    return 0


def cmd_delta(args, out) -> int:
    p = _load(args.file)
    d = deletion_delta(p, p.index(args.alpha))
    if args.json:
        print(_dump(delta_dict(p, d)), file=out)
        return 0
    doc = delta_dict(p, d)
    print(f"alpha: {doc['alpha']}", file=out)
    print(f"betas (cover alpha and more): {', '.join(doc['betas']) or '-'}", file=out)
    print(f"gammas (cover alpha only): {', '.join(doc['gammas']) or '-'}", file=out)
    print(f"uc of betas: {', '.join(map(str, doc['beta_uc'])) or '-'}", file=out)
    print(f"predicted delta: {d.predicted_delta}", file=out)
    print(f"actual delta: {d.actual_delta}", file=out)
    return 0 if d.predicted_delta == d.actual_delta else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetgap",
        description="Facet-count gap between the chain and order polytopes of a finite poset.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="gap, facet counts and per-element chain counts")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="gap class with structural witnesses")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bounds", help="crossing-number bounds for every maximal antichain")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--antichain-cap", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="check every poset up to a size")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--canonical", action="store_true", help="one poset per isomorphism class")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", help="generate seeded random posets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--check", action="store_true", help="run the checks instead of printing")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("export-dot", help="Hasse diagram in DOT")
    p.add_argument("file")
    p.add_argument("--annotate", action="store_true", help="label nodes with uc/dc/crossing")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("delta", help="gap change when a minimal element is removed")
    p.add_argument("file")
    p.add_argument("--alpha", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_delta)
    return parser


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        code = args.func(args, out)
    except (PosetError, TheoremViolation, OSError, ValueError) as exc:
        print(f"posetgap: {type(exc).__name__}: {exc}", file=err)
        return 1
    out.flush()
    return code


def main() -> None:
    sys.exit(run_cli())
