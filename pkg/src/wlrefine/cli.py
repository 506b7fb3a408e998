"""Command-line interface.

Exit codes: 0 success (or DISTINGUISHED), 1 NOT-DISTINGUISHED or a failed
selftest, 2 bad flags, unreadable input or a refused size.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .bench import COLUMNS, run_bench, write_csv
from .estimator import refine
from .graph import Graph, GraphFormatError, parse_dimacs, parse_edge_list
from .isotest import distinguish, escalate
from .partition import snapshot_partition
from .selftest import report, run_selftest
from .validation import SizeLimitError, check_tuple_space
from .wlk import RULES, TupleIndex

PARSERS = {"edgelist": parse_edge_list, "dimacs": parse_dimacs}


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or min(values) < 0:
        raise argparse.ArgumentTypeError(f"expected non-negative integers, got {text!r}")
    return values


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def load_graph(path: str, fmt: str) -> Graph:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return PARSERS[fmt](data)
    except GraphFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _trace_entries(trace, rounds: int) -> list[dict]:
    if trace is None:
        return [{"round": i + 1} for i in range(rounds)]
    return [
        {
            "round": i + 1,
            "drained": r.drained,
            "l_elements": r.l_elements,
            "m_rows": r.m_rows,
            "splits": [{"parent": s.parent, "sizes": s.part_sizes} for s in r.splits],
        }
        for i, r in enumerate(trace.rounds)
    ]


def cmd_refine(args, out) -> int:
    g = load_graph(args.input, args.format)
    check_tuple_space(g.n, args.k)
    colors, rounds, trace = refine(g, args.k, args.rule, args.algorithm)
    index = TupleIndex(g.n, args.k)
    classes = [[list(index.decode(t)) for t in cls] for cls in snapshot_partition(colors)]
    if args.output == "json":
        doc = {
            "n": g.n,
            "k": args.k,
            "rounds": rounds,
            "algorithm": args.algorithm,
            "rule": args.rule,
            "classes": classes,
        }
        if args.trace:
            doc["trace"] = _trace_entries(trace, rounds)
        out.write(json.dumps(doc) + "\n")
        return 0
    sizes = sorted(len(c) for c in classes)
    out.write(f"{len(classes)} classes: sizes {','.join(map(str, sizes))}\n")
    for cls in classes:
        out.write(" ".join(",".join(map(str, t)) for t in cls) + "\n")
    if args.trace:
        for entry in _trace_entries(trace, rounds):
            fields = [f"round {entry['round']}:"]
            if "drained" in entry:
                fields.append(f"drained={entry['drained']} l_elements={entry['l_elements']} m_rows={entry['m_rows']}")
                splits = ";".join(
                    f"{s['parent']}->{'/'.join(map(str, s['sizes']))}" for s in entry["splits"]
                )
                fields.append(f"splits={splits or '-'}")
            out.write(" ".join(fields) + "\n")
    return 0


def cmd_distinguish(args, out) -> int:
    g = load_graph(args.first, args.format)
    h = load_graph(args.second, args.format)
    k_top = args.escalate_to or args.k
    check_tuple_space(g.n + h.n, k_top)
    if args.escalate_to:
        result = escalate(g, h, args.escalate_to, args.rule)
    else:
        result = distinguish(g, h, args.k, args.rule)
    if result.distinguished:
        out.write(f"DISTINGUISHED k={result.k}\n")
        return 0
    out.write(f"NOT-DISTINGUISHED k<={result.k}\n")
    return 1


def cmd_selftest(args, out) -> int:
    checks = run_selftest(args.k_max, args.seed, args.sizes)
    return 0 if report(checks, out) else 1


def cmd_bench(args, out) -> int:
    for n in args.sizes:
        check_tuple_space(n, args.k)
    rows = run_bench(args.k, args.family, args.sizes, args.reps, args.seed, args.rule, args.avg_degree)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_csv(rows, fh)
    else:
        write_csv(rows, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wlrefine", description="Weisfeiler-Leman refinement tools")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("refine", help="print the stable partition of one graph")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=sorted(PARSERS), default="edgelist")
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--rule", choices=RULES, default="columns")
    p.add_argument("--algorithm", choices=("worklist", "naive"), default="worklist")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--trace", action="store_true", help="include the per-round split log")
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("distinguish", help="test whether k-WL separates two graphs")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--format", choices=sorted(PARSERS), default="edgelist")
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--escalate-to", type=_positive, default=None, metavar="K")
    p.add_argument("--rule", choices=RULES, default="columns")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("selftest", help="compare the engines against the naive oracle")
    p.add_argument("--k-max", type=_positive, default=2)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--sizes", type=_int_list, default=[4, 6, 8])
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", help=f"time refinement; CSV columns: {','.join(COLUMNS)}")
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--family", default="gnp", choices=("gnp", "cycle", "path", "complete", "rook4x4", "shrikhande"))
    p.add_argument("--sizes", type=_int_list, default=[512, 1024, 2048])
    p.add_argument("--reps", type=_positive, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rule", choices=RULES, default="columns")
    p.add_argument("--avg-degree", type=float, default=8.0, help="gnp uses p = avg_degree / n")
    p.add_argument("--out", default=None, help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (UsageError, SizeLimitError, ValueError) as exc:
        print(f"wlrefine: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
