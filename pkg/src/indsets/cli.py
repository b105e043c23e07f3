"""Command-line front end.

    indsets table p_total --h 0..10 --n 0..14
    indsets table H --route convolution --h 1 --n 0..11 --format csv
    indsets verify all --h 10 --n 30
    indsets conjecture --h 0..8 --n ..60
    indsets enum pathPower --n 3 --h 1 --output subsets
    indsets cube lucas --n 5 --output edgelist

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 capacity error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Tuple

from . import graphs, tables
from .cycles import conjecture_scan
from .graphs import CapacityError, GraphFamily, GraphSpec
from .verify import ORACLE_N, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


def parse_range(text: str, default_lo: int = 0) -> Tuple[int, int]:
    """'a..b', '..b' (lower end defaults), or a single integer 'a'."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_v = int(lo) if lo.strip() else default_lo
            if not hi.strip():
                raise ValueError
            return lo_v, int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 0..10 or a single integer, got {text!r}") from None


def _add_limit(p: argparse.ArgumentParser) -> None:
    p.add_argument("--limit", type=int, default=graphs.DEFAULT_LIMIT,
                   help=f"enumeration capacity in vertices (default {graphs.DEFAULT_LIMIT})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indsets", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="tabulate a counting quantity")
    t.add_argument("quantity", choices=list(tables.QUANTITIES))
    t.add_argument("--route", choices=tables.ROUTES, default="auto")
    for axis in ("h", "n", "k", "i"):
        t.add_argument(f"--{axis}", type=parse_range, default=None, metavar="A..B")
    t.add_argument("--format", choices=tables.FORMATS, default="ascii")
    _add_limit(t)

    v = sub.add_parser("verify", help="run identity and oracle suites")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--h", type=parse_range, default=(0, 4), metavar="A..B", help="upper end is h_max")
    v.add_argument("--n", type=parse_range, default=(0, 16), metavar="A..B", help="upper end is n_max")
    v.add_argument("--oracle-n", type=int, default=ORACLE_N,
                   help=f"largest n checked by enumeration (default {ORACLE_N})")
    v.add_argument("--format", choices=("text", "json"), default="text")
    _add_limit(v)

    c = sub.add_parser("conjecture", help="scan the Fibonacci/Lucas convolution for the cycle edge counts")
    c.add_argument("--h", type=parse_range, default=(0, 10), metavar="A..B")
    c.add_argument("--n", type=parse_range, default=(0, 30), metavar="A..B")
    c.add_argument("--include-boundary", action="store_true", help="also report the n = h cells (informational)")
    c.add_argument("--format", choices=("text", "json"), default="text")

    e = sub.add_parser("enum", help="enumerate independent subsets of a path or cycle power")
    e.add_argument("family", choices=[f.value for f in GraphFamily])
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--h", type=int, required=True)
    e.add_argument("--output", choices=("subsets", "census", "hasse", "edgelist"), default="subsets")
    _add_limit(e)

    q = sub.add_parser("cube", help="list Fibonacci/Lucas strings or their Hamming-cube edges")
    q.add_argument("variant", choices=("fibonacci", "lucas"))
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--output", choices=("strings", "edgelist", "check"), default="strings")
    _add_limit(q)
    return parser


def _cmd_table(args) -> Tuple[str, int]:
    req = tables.TableRequest(args.quantity, args.route, args.h, args.n, args.k, args.i,
                              args.format, args.limit)
    return tables.render(tables.build_table(req), args.format), EXIT_OK


def _emit_report(report, fmt: str) -> Tuple[str, int]:
    text = report.to_json() if fmt == "json" else report.render()
    return text + "\n", EXIT_OK if report.ok else EXIT_FAIL


def _cmd_verify(args) -> Tuple[str, int]:
    report = run_suite(args.suite, args.h[1], args.n[1], oracle_n=args.oracle_n, limit=args.limit)
    return _emit_report(report, args.format)


def _cmd_conjecture(args) -> Tuple[str, int]:
    (h_lo, h_hi), (n_lo, n_hi) = args.h, args.n
    report = conjecture_scan(h_hi, n_hi, include_boundary=args.include_boundary, h_min=h_lo, n_min=n_lo)
    return _emit_report(report, args.format)


def _cmd_enum(args) -> Tuple[str, int]:
    g = graphs.build_graph(GraphSpec(args.family, args.n, args.h))
    if args.output == "edgelist":
        return g.edge_list_text(), EXIT_OK
    if args.output == "census":
        census = graphs.count_independent_by_size(g, args.limit)
        return json.dumps({str(k): v for k, v in census.by_size.items()}) + "\n", EXIT_OK
    masks = graphs.enum_independent(g, args.limit)
    if args.output == "subsets":
        return "".join(graphs.format_subset(m) + "\n" for m in masks.tolist()), EXIT_OK
    hasse = graphs.build_hasse(masks, g.n)
    lines = (f"{graphs.format_subset(a)} < {graphs.format_subset(b)}\n" for a, b in hasse.covers.tolist())
    return "".join(lines), EXIT_OK


def _cmd_cube(args) -> Tuple[str, int]:
    if args.output == "check":
        return _emit_report(graphs.check_cube_correspondence(args.n, args.variant, args.limit), "text")
    if args.variant == "fibonacci":
        strings = graphs.enum_fibonacci_strings(args.n, args.limit)
    else:
        strings = graphs.enum_lucas_strings(args.n, args.limit)
    if args.output == "strings":
        return "".join(s + "\n" for s in strings), EXIT_OK
    cube = graphs.build_hamming_cube(strings)
    return "".join(f"{strings[u - 1]} {strings[v - 1]}\n" for u, v in cube.edges.tolist()), EXIT_OK


COMMANDS = {
    "table": _cmd_table,
    "verify": _cmd_verify,
    "conjecture": _cmd_conjecture,
    "enum": _cmd_enum,
    "cube": _cmd_cube,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, code = COMMANDS[args.command](args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
