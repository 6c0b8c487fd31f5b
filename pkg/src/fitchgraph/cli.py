"""Command-line interface.

Exit codes: 0 = success / accept, 1 = clean reject (graph not multipartite,
tree does not explain, not least-resolved), 2 = usage or input error.
Results go to stdout, diagnostics to stderr.  A filename of ``-`` reads
stdin; input kind (tree vs. graph) is inferred from content.
"""

from __future__ import annotations

import argparse
import sys

from . import enumeration, io
from .fitch import directed_fitch, undirected_fitch
from .graphs import SimpleGraph
from .recognition import ForbiddenWitness, Partition, recognize
from .synthesis import explain, is_least_resolved
from .tree import LabeledTree


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _looks_like_edgelist(text: str) -> bool:
    for raw in text.replace("\r\n", "\n").split("\n"):
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.startswith("vertices:")
    return False


def _load_tree(path: str) -> LabeledTree:
    text = _read(path)
    if _looks_like_edgelist(text):
        raise io.ParseError("expected a tree (Newick), got an edge list")
    return io.parse_newick(text)


def _load_graph(path: str) -> SimpleGraph:
    text = _read(path)
    if not _looks_like_edgelist(text):
        raise io.ParseError("expected a graph (edge list), got something else")
    return io.parse_edgelist(text)


def _format_witness(w: ForbiddenWitness) -> str:
    x, y = w.pair
    return f"witness: {w.isolated} | {x}--{y}"


def _format_partition(p: Partition) -> str:
    blocks = " ".join("{" + ",".join(sorted(b)) + "}" for b in p.blocks)
    return f"blocks: {blocks}"


def cmd_compute(args: argparse.Namespace) -> int:
    tree = _load_tree(args.tree)
    if args.directed:
        if tree.root is None:
            raise io.ParseError("directed Fitch graph requires a rooted tree")
        sys.stdout.write(io.serialize_arclist(directed_fitch(tree)))
    else:
        sys.stdout.write(io.serialize_edgelist(undirected_fitch(tree)))
    return 0


def cmd_recognize(args: argparse.Namespace) -> int:
    result = recognize(_load_graph(args.graph))
    if isinstance(result, ForbiddenWitness):
        print(_format_witness(result))
        return 1
    print(_format_partition(result))
    return 0


def cmd_explain(args: argparse.Namespace) -> int:
    mode = "minimal" if args.minimal else "canonical"
    result = explain(_load_graph(args.graph), mode=mode)
    if isinstance(result, ForbiddenWitness):
        print(_format_witness(result))
        return 1
    print(io.serialize_newick(result))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    tree = _load_tree(args.tree)
    graph = _load_graph(args.graph)
    explains = undirected_fitch(tree) == graph
    print(f"explains: {'yes' if explains else 'no'}")
    if not explains:
        return 1
    if args.least_resolved:
        least = is_least_resolved(tree, graph)
        print(f"least-resolved: {'yes' if least else 'no'}")
        if not least:
            return 1
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    low, high = 2, enumeration.MAX_REALIZABLE_LEAVES
    if not low <= args.n <= high:
        print(f"error: n out of supported range {low}..{high}", file=sys.stderr)
        return 2
    report = enumeration.realizable_graphs(args.n)
    sys.stdout.write(enumeration.format_report(report, include_graphs=args.report))
    return 0


def cmd_dot(args: argparse.Namespace) -> int:
    text = _read(args.input)
    obj = io.parse_edgelist(text) if _looks_like_edgelist(text) else io.parse_newick(text)
    sys.stdout.write(io.to_dot(obj))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fitchgraph",
        description="Fitch graphs of {0,1}-edge-labeled trees: compute, "
        "recognize, explain, verify, enumerate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Fitch graph of a Newick tree")
    p.add_argument("tree", help="Newick file ('-' for stdin)")
    p.add_argument("--directed", action="store_true", help="emit the arc list")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("recognize", help="partition or witness for a graph")
    p.add_argument("graph", help="edge-list file ('-' for stdin)")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("explain", help="explaining tree for a graph")
    p.add_argument("graph", help="edge-list file ('-' for stdin)")
    p.add_argument("--minimal", action="store_true", help="fewest-vertex tree")
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("verify", help="does the tree explain the graph?")
    p.add_argument("tree", help="Newick file ('-' for stdin)")
    p.add_argument("graph", help="edge-list file ('-' for stdin)")
    p.add_argument(
        "--least-resolved",
        action="store_true",
        help="also check that no edge contraction preserves the graph",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="exhaustive census of n-leaf Fitch graphs")
    p.add_argument("n", type=int, help="leaf count (2..5)")
    p.add_argument("--report", action="store_true", help="list realizable graphs")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dot", help="Graphviz rendering of a tree or graph")
    p.add_argument("input", help="Newick or edge-list file ('-' for stdin)")
    p.set_defaults(func=cmd_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors exit with 2 already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except io.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
