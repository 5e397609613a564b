"""Command-line surface: sizing tables, labelling verification, and
delivery simulation.

Exit codes: 0 success / verified, 1 violations or failed delivery, 2 usage
errors. Table cells are pure integers or fixed one-decimal percents, so
default invocations are byte-stable across runs.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from decimal import ROUND_HALF_UP, Decimal
from typing import Sequence, TextIO

from .bloom import (
    analytic_fpr,
    at_least_one_fp,
    bloom_labelling,
    empirical_fpr,
    optimal_label_weight,
    optimal_label_weight_int,
)
from .decompose import (
    DecompositionError,
    NotATreeError,
    core_periphery_universe_size,
    label_core_periphery,
    label_tree,
    perfect_tree_universe_size,
)
from .graphs import (
    EdgeListParseError,
    Graph,
    NoPathError,
    ceil_log2,
    load_edge_list,
    make_complete,
    make_core_periphery,
    make_perfect_binary_tree,
    make_star,
)
from .labelling import bit_per_edge, bit_per_vertex, optimal_rank, star_labelling
from .routing import simulate_delivery, verify_no_false_positives

STAR_TABLE_DEFAULT = (10, 100, 1_000, 10_000, 100_000, 1_000_000)
CORE_PERIPHERY_TABLE_DEFAULT = (100, 200, 300, 400, 500)
TREE_TABLE_DEFAULT = (5, 10, 15)
BLOOM_TABLE_DEFAULT = (10, 20, 30, 40)

MAX_PRINTED_VIOLATIONS = 20


class UsageError(Exception):
    """Bad flag combinations; reported on stderr with exit code 2."""


def format_percent(p: float) -> str:
    """Probability -> percent with one decimal, round half up."""
    return str(Decimal(repr(p * 100.0)).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


def emit_table(headers: Sequence[str], rows: Sequence[Sequence], fmt: str, out: TextIO) -> None:
    cells = [[str(c) for c in row] for row in rows]
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(cells)
        return
    widths = [
        max(len(h), *(len(row[i]) for row in cells)) if cells else len(h)
        for i, h in enumerate(headers)
    ]
    out.write("| " + " | ".join(h.rjust(widths[i]) for i, h in enumerate(headers)) + " |\n")
    out.write("|" + "|".join("-" * (w + 2) for w in widths) + "|\n")
    for row in cells:
        out.write("| " + " | ".join(v.rjust(widths[i]) for i, v in enumerate(row)) + " |\n")


# ---------------------------------------------------------------------------
# table commands


def cmd_star_table(args: argparse.Namespace) -> int:
    rows = []
    for n in args.sizes:
        if n < 1:
            raise UsageError("star sizes must be >= 1")
        # every star pair has a unique shortest path: n one-edge + C(n,2) two-edge
        path_count = n + math.comb(n, 2)
        choice = optimal_rank(n)
        rows.append([n, ceil_log2(path_count), choice.size, choice.rank])
    emit_table(
        ["n", "theoretical_smallest_size", "universe_size", "optimal_rank"],
        rows,
        args.format,
        sys.stdout,
    )
    return 0


def cmd_core_periphery_table(args: argparse.Namespace) -> int:
    rows = []
    for n in args.sizes:
        if n < 2:
            raise UsageError("core-periphery sizes must be >= 2")
        vertices = n * n
        edges = math.comb(n, 2) + n * (n - 1)
        # all vertex pairs have unique shortest paths here
        rows.append(
            [n, vertices, edges, ceil_log2(math.comb(vertices, 2)), core_periphery_universe_size(n)]
        )
    emit_table(
        ["n", "vertices", "edges", "theoretical_smallest_size", "universe_size"],
        rows,
        args.format,
        sys.stdout,
    )
    return 0


def cmd_binary_tree_table(args: argparse.Namespace) -> int:
    rows = []
    for h in args.heights:
        if h < 1:
            raise UsageError("tree heights must be >= 1")
        vertices = 2 ** (h + 1) - 1
        rows.append(
            [h, vertices, ceil_log2(math.comb(vertices, 2)), perfect_tree_universe_size(h)]
        )
    emit_table(
        ["height", "vertices", "theoretical_smallest_size", "universe_size"],
        rows,
        args.format,
        sys.stdout,
    )
    print(
        "note: theoretical_smallest_size = ceil(log2(total number of shortest "
        "paths)); on a tree that is ceil(log2(C(|V|, 2)))",
        file=sys.stderr,
    )
    return 0


def cmd_bloom_table(args: argparse.Namespace) -> int:
    headers = ["edges", "universe_size", "analytic_fpr_percent"]
    if args.at_least_one:
        headers.append("at_least_one_percent")
    if args.empirical:
        headers.append("empirical_fpr_percent")
    rows = []
    for e in args.sizes:
        if e < 3:
            raise UsageError("bloom table sizes must be >= 3")
        m = optimal_rank(e).size
        fpr = analytic_fpr(m, 2, optimal_label_weight(m, 2))
        fpr_cell = format_percent(fpr)
        row: list = [e, m, fpr_cell]
        if args.at_least_one:
            # uses the rounded per-edge percent, matching the printed column
            rounded_p = float(fpr_cell) / 100.0
            row.append(format_percent(at_least_one_fp(rounded_p, e - 2)))
        if args.empirical:
            k_int = optimal_label_weight_int(m, 2)
            rate, _ = empirical_fpr(e, m, k_int, args.trials, args.seed)
            row.append(format_percent(rate))
        rows.append(row)
    emit_table(headers, rows, args.format, sys.stdout)
    return 0


# ---------------------------------------------------------------------------
# graph / labelling resolution for verify and route


def _add_graph_arguments(sub: argparse.ArgumentParser) -> None:
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--star", type=int, metavar="N", help="star with N edges")
    source.add_argument("--complete", type=int, metavar="N", help="complete graph on N vertices")
    source.add_argument(
        "--core-periphery",
        type=int,
        metavar="N",
        dest="core_periphery",
        help="complete core of N vertices, N-1 leaves each",
    )
    source.add_argument("--tree", type=int, metavar="H", help="perfect binary tree of height H")
    source.add_argument("--graph", metavar="PATH", help="edge-list file ('V E' then 'u v' lines)")


def _add_scheme_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--scheme",
        required=True,
        choices=["bit-per-edge", "bit-per-vertex", "star", "combined", "bloom"],
    )
    sub.add_argument("--rank", type=int, help="star scheme: tuple rank (default: optimal)")
    sub.add_argument(
        "--core", metavar="IDS", help="combined scheme with --graph: comma-separated core vertex ids"
    )
    sub.add_argument("--m", type=int, help="bloom scheme: universe size")
    sub.add_argument("--k", type=int, help="bloom scheme: label weight")
    sub.add_argument("--seed", type=int, default=1, help="bloom scheme: RNG seed")
    sub.add_argument("--dump-labelling", metavar="PATH", help="write the labelling as text")


def _resolve_graph(args: argparse.Namespace) -> tuple[Graph, frozenset[int] | None]:
    if args.star is not None:
        return make_star(args.star), None
    if args.complete is not None:
        return make_complete(args.complete), None
    if args.core_periphery is not None:
        return make_core_periphery(args.core_periphery)
    if args.tree is not None:
        return make_perfect_binary_tree(args.tree), None
    with open(args.graph, encoding="utf-8") as fh:
        return load_edge_list(fh.read()), None


def _resolve_labelling(args: argparse.Namespace, g: Graph, core: frozenset[int] | None):
    if args.scheme == "bit-per-edge":
        return bit_per_edge(g)
    if args.scheme == "bit-per-vertex":
        return bit_per_vertex(g)
    if args.scheme == "star":
        if args.star is None:
            raise UsageError("--scheme star requires a --star graph")
        rank = args.rank if args.rank is not None else optimal_rank(args.star).rank
        return star_labelling(args.star, rank)
    if args.scheme == "combined":
        if core is not None:
            return label_core_periphery(g, core)
        if args.tree is not None:
            return label_tree(g, 0)
        if args.graph is not None and args.core:
            core_set = frozenset(int(tok) for tok in args.core.split(","))
            return label_core_periphery(g, core_set)
        raise UsageError("--scheme combined requires --core-periphery, --tree, or --graph with --core")
    if args.scheme == "bloom":
        if args.m is None or args.k is None:
            raise UsageError("--scheme bloom requires --m and --k")
        return bloom_labelling(g, args.m, args.k, args.seed)
    raise UsageError(f"unknown scheme {args.scheme}")


def _maybe_dump(args: argparse.Namespace, labelling) -> None:
    if args.dump_labelling:
        with open(args.dump_labelling, "w", encoding="utf-8") as fh:
            fh.write(labelling.to_text())


def cmd_verify(args: argparse.Namespace) -> int:
    g, core = _resolve_graph(args)
    labelling = _resolve_labelling(args, g, core)
    _maybe_dump(args, labelling)
    report = verify_no_false_positives(g, labelling, path_cap=args.path_cap)
    print(report.summary())
    for u, v, eid in report.false_positives[:MAX_PRINTED_VIOLATIONS]:
        print(f"false positive: pair ({u}, {v}) edge {eid}")
    hidden = len(report.false_positives) - MAX_PRINTED_VIOLATIONS
    if hidden > 0:
        print(f"... {hidden} more violations not shown")
    return 0 if report.ok else 1


def cmd_route(args: argparse.Namespace) -> int:
    g, core = _resolve_graph(args)
    labelling = _resolve_labelling(args, g, core)
    _maybe_dump(args, labelling)
    try:
        trace = simulate_delivery(g, labelling, args.source, args.dest)
    except NoPathError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print("visited: " + " ".join(str(v) for v in trace.visited))
    print("candidates per hop: " + " ".join(str(c) for c in trace.candidate_counts))
    print(f"outcome: {trace.outcome} at {trace.at} in {trace.hop_count} hops")
    return 0 if trace.delivered else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bitpath",
        description="False-positive-free bit-header path encodings: sizing tables, "
        "verification, and forwarding simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["markdown", "csv"], default="markdown")

    p = sub.add_parser("star-table", help="universe sizes for star graphs")
    p.add_argument("sizes", type=int, nargs="*", default=list(STAR_TABLE_DEFAULT))
    add_format(p)
    p.set_defaults(func=cmd_star_table)

    p = sub.add_parser("core-periphery-table", help="universe sizes for core-periphery graphs")
    p.add_argument("sizes", type=int, nargs="*", default=list(CORE_PERIPHERY_TABLE_DEFAULT))
    add_format(p)
    p.set_defaults(func=cmd_core_periphery_table)

    p = sub.add_parser("binary-tree-table", help="universe sizes for perfect binary trees")
    p.add_argument("heights", type=int, nargs="*", default=list(TREE_TABLE_DEFAULT))
    add_format(p)
    p.set_defaults(func=cmd_binary_tree_table)

    p = sub.add_parser("bloom-table", help="random-label false-positive rates on stars")
    p.add_argument("sizes", type=int, nargs="*", default=list(BLOOM_TABLE_DEFAULT))
    p.add_argument("--at-least-one", action="store_true", help="add P(any off-path FP) column")
    p.add_argument("--empirical", action="store_true", help="add a measured-rate column")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_bloom_table)

    p = sub.add_parser("verify", help="run the exhaustive false-positive oracle")
    _add_graph_arguments(p)
    _add_scheme_arguments(p)
    p.add_argument("--path-cap", type=int, default=1000, help="max shortest paths per pair")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("route", help="simulate one header-driven delivery")
    _add_graph_arguments(p)
    _add_scheme_arguments(p)
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--dest", type=int, required=True)
    p.set_defaults(func=cmd_route)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EdgeListParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DecompositionError, NotATreeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
