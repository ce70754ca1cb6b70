"""Command-line interface.

    webtopo analyze   EDGES --out-dir DIR [--directed]
    webtopo summary   EDGES [--directed] [--out FILE]
    webtopo aggregate CURVE.csv ... --out FILE [--min-support-ratio R]
    webtopo fit       CURVE.csv [--out FILE]
    webtopo compare   CURVE.csv [--reference FIT.json] [--out FILE]
    webtopo generate  --model ba|er --n N ... --seed S --out FILE
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .aggregate import (
    DEFAULT_MIN_SUPPORT,
    REFERENCE_FIT,
    CurveCollection,
    QuadraticLogFit,
    average_curves,
    compare_to_reference,
    fit_quadratic_loglog,
)
from .connectivity import degree_distribution, knn_curve, network_summary, rich_club_curve
from .errors import TopologyError
from .generators import BaParams, ErParams, generate_ba, generate_er
from .graph import build_directed, build_undirected, to_undirected
from .ingest import (
    EdgeListFormat,
    atomic_write,
    iter_edge_list,
    read_curve,
    write_curve,
    write_edge_list,
    write_summary,
)
from .triangles import (
    c_of_k_curve,
    delta_in_curve,
    delta_of_k_curve,
    delta_out_curve,
    directed_triangle_coefficients,
    triangle_ccdf,
    triangle_coefficients,
)

log = logging.getLogger("webtopo")

CURVE_FILES = {
    "pk": "pk.csv",
    "knn": "knn.csv",
    "phi": "phi.csv",
    "pc_delta": "pc_delta.csv",
    "delta_k": "delta_k.csv",
    "c_k": "c_k.csv",
}
DIRECTED_CURVE_FILES = {"delta_in": "delta_in.csv", "delta_out": "delta_out.csv"}
SUMMARY_FILE = "summary.json"


def _ratio(text: str) -> Fraction:
    try:
        r = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a ratio: {text!r}")
    if not 0 < r <= 1:
        raise argparse.ArgumentTypeError(f"ratio must lie in (0, 1], got {text}")
    return r


def _load(args):
    fmt = EdgeListFormat(delimiter=args.delimiter, directed=args.directed)
    t0 = time.perf_counter()
    if args.directed:
        dg = build_directed(iter_edge_list(args.input, fmt))
        g = to_undirected(dg)
    else:
        dg = None
        g = build_undirected(iter_edge_list(args.input, fmt))
    log.info("loaded %s: N=%d L=%d (%.1fs)", args.input, g.node_count, g.link_count,
             time.perf_counter() - t0)
    return g, dg


def _dump_json(doc, out):
    text = json.dumps(doc, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with atomic_write(out) as fh:
            fh.write(text)


def cmd_analyze(args) -> None:
    g, dg = _load(args)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    profile = triangle_coefficients(g)
    log.info("triangles: %d (%.1fs)", profile.triangle_count, time.perf_counter() - t0)
    summary = network_summary(g, profile)
    curves = {
        "pk": degree_distribution(g),
        "knn": knn_curve(g),
        "phi": rich_club_curve(g),
        "pc_delta": triangle_ccdf(g, profile),
        "delta_k": delta_of_k_curve(g, profile),
        "c_k": c_of_k_curve(g, profile),
    }
    names = dict(CURVE_FILES)
    if dg is not None:
        dprofile = directed_triangle_coefficients(dg)
        curves["delta_in"] = delta_in_curve(dg, dprofile)
        curves["delta_out"] = delta_out_curve(dg, dprofile)
        names.update(DIRECTED_CURVE_FILES)
    for metric, curve in curves.items():
        write_curve(curve, out / names[metric], metric)
    write_summary(summary, out / SUMMARY_FILE, dataset=args.name or Path(args.input).stem)
    log.info("wrote %d curves and %s to %s", len(curves), SUMMARY_FILE, out)


def cmd_summary(args) -> None:
    g, _ = _load(args)
    summary = network_summary(g)
    name = args.name or Path(args.input).stem
    if args.out is None:
        doc = summary.to_dict()
        doc["metadata"] = {"dataset": name, "tool_version": __version__}
        _dump_json(doc, None)
    else:
        write_summary(summary, args.out, dataset=name)


def cmd_aggregate(args) -> None:
    curves = [(str(p), read_curve(p)) for p in args.inputs]
    avg = average_curves(CurveCollection(curves, args.min_support_ratio))
    write_curve(avg, args.out, "average")
    log.info("averaged %d curves into %d points", len(curves), len(avg))


def cmd_fit(args) -> None:
    fit = fit_quadratic_loglog(read_curve(args.curve))
    _dump_json(fit.to_dict(), args.out)


def cmd_compare(args) -> None:
    if args.reference is None:
        ref = REFERENCE_FIT
    else:
        with open(args.reference, encoding="utf-8") as fh:
            ref = QuadraticLogFit.from_dict(json.load(fh))
    report = compare_to_reference(read_curve(args.curve), ref)
    _dump_json(report.to_dict(), args.out)


def cmd_generate(args) -> None:
    if args.model == "ba":
        if args.m is None:
            raise TopologyError("--m is required for the BA model")
        g = generate_ba(BaParams(args.n, args.m, args.m0, args.seed))
    else:
        g = generate_er(ErParams(args.n, p=args.p, target_links=args.links, seed=args.seed))
    u, v = g.edges()
    n = write_edge_list(zip(u.tolist(), v.tolist()), args.out)
    log.info("wrote %d edges to %s", n, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="webtopo", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("input", help="edge-list file")
        p.add_argument("--directed", action="store_true",
                       help="treat lines as arcs (tail head)")
        p.add_argument("--delimiter", default=None,
                       help="token separator (default: any whitespace)")
        p.add_argument("--name", default=None, help="dataset name for the summary")

    p = sub.add_parser("analyze", help="compute all curves and the summary")
    graph_input(p)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("summary", help="compute the scalar summary only")
    graph_input(p)
    p.add_argument("--out", default=None, help="JSON output (default: stdout)")
    p.set_defaults(func=cmd_summary)

    p = sub.add_parser("aggregate", help="average curves across networks")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--min-support-ratio", type=_ratio, default=DEFAULT_MIN_SUPPORT)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("fit", help="quadratic fit of a curve in log-log space")
    p.add_argument("curve")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("compare", help="log10 deviation of a curve from a reference fit")
    p.add_argument("curve")
    p.add_argument("--reference", default=None,
                   help="fit JSON from 'webtopo fit' (default: web-site reference curve)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("generate", help="write a synthetic edge list")
    p.add_argument("--model", choices=["ba", "er"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="BA links per new node")
    p.add_argument("--m0", type=int, default=None, help="BA seed ring size (default m)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--p", type=float, default=None, help="ER link probability")
    group.add_argument("--links", type=int, default=None, help="ER exact link count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        args.func(args)
    except (TopologyError, OSError, ValueError) as exc:
        print(f"webtopo {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
