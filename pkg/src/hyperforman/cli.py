"""Command-line front end: curvature tables, statistics, extremes, bounds,
and format conversion over hyperedge, reaction, and weighted-document files.

Exit status: 0 on success, 1 when the input cannot be read or parsed
(diagnostics with line numbers go to stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import curvature, ingest, stats
from .core import DirectedHypergraph, UndirectedHypergraph, WeightOverlay
from .curvature import DIRECTED_VARIANTS

MODES = ("undirected", "directed", "weighted")
DEFAULT_BIN_WIDTH = {"undirected": 10.0, "weighted": 10.0, "directed": 500.0}
HISTOGRAM_VARIANTS = DIRECTED_VARIANTS[:-1]  # F_total has no published figure


@dataclass
class RunConfig:
    command: str
    input_path: str | None
    mode: str
    format: str
    bin_width: float | None
    top_k: int
    variant: str | None
    weights_path: str | None
    regime: str
    output_path: str | None


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"{text!r} is not a positive number")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} is not a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperforman",
        description="Forman-Ricci curvature for graphs, hypergraphs, and "
        "directed hypergraphs (reaction networks).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", help="input file (stdin when omitted)")
        p.add_argument("--mode", required=True, choices=MODES)
        p.add_argument(
            "--weights",
            metavar="FILE",
            help="weighted hypergraph document (JSON); only with --mode weighted, "
            "replaces the positional input",
        )
        p.add_argument("--output", metavar="FILE", help="write here instead of stdout")

    p = sub.add_parser("compute", help="curvature record table per edge/arc")
    common(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("stats", help="distributions, histograms, per-bin summaries (JSON)")
    common(p)
    p.add_argument(
        "--bin-width",
        type=_positive_float,
        default=None,
        help="histogram bin width (default: 10 undirected/weighted, 500 directed)",
    )

    p = sub.add_parser("extremes", help="top-k most negative/positive records (JSON)")
    common(p)
    p.add_argument("--variant", default=None, help="curvature variant to rank by")
    p.add_argument("--top", type=_positive_int, default=5, dest="top_k")

    p = sub.add_parser("bounds", help="per-edge curvature bounds")
    common(p)
    p.add_argument("--regime", choices=("multiset", "simple"), default="multiset")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("convert", help="normalized re-serialization of the input")
    common(p)

    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=args.input,
        mode=args.mode,
        format=getattr(args, "format", "json"),
        bin_width=getattr(args, "bin_width", None),
        top_k=getattr(args, "top_k", 5),
        variant=getattr(args, "variant", None),
        weights_path=args.weights,
        regime=getattr(args, "regime", "multiset"),
        output_path=args.output,
    )


def _read_input(config: RunConfig) -> str:
    path = config.weights_path or config.input_path
    if path is None:
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load(config: RunConfig, text: str):
    if config.mode == "undirected":
        return ingest.parse_undirected(text), None
    if config.mode == "directed":
        return ingest.parse_reactions(text), None
    return ingest.parse_weighted(text)


def _stats_payload(config, graph, overlay, records) -> dict:
    width = config.bin_width or DEFAULT_BIN_WIDTH[config.mode]
    if isinstance(graph, DirectedHypergraph):
        sums = {
            "sum_in_tail": [r.degree_sum[0] for r in records],
            "sum_out_tail": [r.degree_sum[1] for r in records],
            "sum_in_head": [r.degree_sum[2] for r in records],
            "sum_out_head": [r.degree_sum[3] for r in records],
        }
        return {
            "mode": "directed",
            "vertices": graph.vertex_count,
            "arcs": graph.arc_count,
            "tail_head_frequencies": stats.tail_head_frequencies(graph).to_dict(),
            "in_degree_distribution": _distribution_dict(
                stats.degree_distribution(graph, "in")
            ),
            "out_degree_distribution": _distribution_dict(
                stats.degree_distribution(graph, "out")
            ),
            "degree_sum_histograms": {
                name: stats.curvature_histogram(values, width).to_dict()
                for name, values in sums.items()
            },
            "curvature_histograms": {
                variant: stats.curvature_histogram(
                    [r.values[variant] for r in records], width
                ).to_dict()
                for variant in HISTOGRAM_VARIANTS
            },
        }
    histogram = stats.curvature_histogram([r.values["F"] for r in records], width)
    return {
        "mode": config.mode,
        "vertices": graph.vertex_count,
        "edges": graph.edge_count,
        "size_distribution": _distribution_dict(stats.size_distribution(graph)),
        "degree_distribution": _distribution_dict(
            stats.degree_distribution(graph, "undirected")
        ),
        "curvature_histogram": histogram.to_dict(),
        "per_bin_summaries": {
            "normalized_size": [
                s.to_dict()
                for s in stats.per_bin_summary(records, histogram, "normalized_size")
            ],
            "hyperedge_degree": [
                s.to_dict()
                for s in stats.per_bin_summary(
                    records, histogram, "hyperedge_degree_median", graph
                )
            ],
        },
    }


def _distribution_dict(distribution: dict[int, int]) -> dict[str, int]:
    return {str(k): v for k, v in sorted(distribution.items())}


def _bounds_output(config, graph) -> str:
    regime = config.regime
    if isinstance(graph, DirectedHypergraph):
        rows = []
        for e in range(graph.arc_count):
            t, hd = int(graph.tail_sizes[e]), int(graph.head_sizes[e])
            for variant in DIRECTED_VARIANTS[:-1]:
                pair = curvature.bounds_directed(
                    t, hd, graph.arc_count, variant, graph.vertex_count, regime
                )
                rows.append(
                    {
                        "edge_index": e,
                        "tail_size": t,
                        "head_size": hd,
                        "variant": variant,
                        "lower": pair.lower,
                        "upper": pair.upper,
                    }
                )
        header = "edge_index,tail_size,head_size,variant,lower,upper"
    else:
        rows = []
        for e in range(graph.edge_count):
            size = int(graph.sizes[e])
            pair = curvature.bounds_undirected(
                size, graph.edge_count, graph.vertex_count, regime
            )
            rows.append(
                {
                    "edge_index": e,
                    "size": size,
                    "lower": pair.lower,
                    "upper": pair.upper,
                }
            )
        header = "edge_index,size,lower,upper"
    if config.format == "json":
        return json.dumps(rows, indent=2) + "\n"
    lines = [header]
    for row in rows:
        lines.append(",".join(str(row[k]) for k in header.split(",")))
    return "\n".join(lines) + "\n"


def _convert_output(config, graph, overlay) -> str:
    if isinstance(graph, DirectedHypergraph):
        return ingest.write_reaction_lines(graph)
    if config.mode == "weighted":
        return ingest.write_weighted_document(graph, overlay)
    return ingest.write_undirected_lines(graph)


def run(config: RunConfig, parser: argparse.ArgumentParser | None = None) -> int:
    """Execute one configured invocation; returns the process exit status."""

    def usage_error(message: str) -> int:
        if parser is not None:
            parser.error(message)  # exits with status 2
        print(f"error: {message}", file=sys.stderr)
        return 2

    if config.weights_path and config.mode != "weighted":
        return usage_error("--weights requires --mode weighted")
    if config.weights_path and config.input_path:
        return usage_error("--weights replaces the positional input")

    try:
        text = _read_input(config)
        graph, overlay = _load(config, text)
    except ingest.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if config.command == "convert":
        output = _convert_output(config, graph, overlay)
    elif config.command == "bounds":
        output = _bounds_output(config, graph)
    else:
        records = curvature.compute_all(graph, overlay)
        if config.command == "compute":
            output = ingest.write_records(
                records, config.format, directed=isinstance(graph, DirectedHypergraph)
            )
        elif config.command == "stats":
            output = json.dumps(_stats_payload(config, graph, overlay, records), indent=2) + "\n"
        else:  # extremes
            default = "F_through" if isinstance(graph, DirectedHypergraph) else "F"
            variant = config.variant or default
            valid = DIRECTED_VARIANTS if isinstance(graph, DirectedHypergraph) else ("F",)
            if variant not in valid:
                return usage_error(
                    f"unknown variant {variant!r} for mode {config.mode!r}"
                )
            report = stats.extremes(records, variant, config.top_k, graph)
            output = json.dumps(report.to_dict(), indent=2) + "\n"

    if config.output_path:
        Path(config.output_path).write_text(output, encoding="utf-8")
    else:
        sys.stdout.write(output)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(_config(args), parser)


if __name__ == "__main__":
    sys.exit(main())
