"""Command-line front end: ``dyntopo run|dot|bench TRACE``."""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .errors import TraceError
from .trace import Replayer, export_dot, parse_trace, run_bench

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SEMANTIC = 2
EXIT_CHECK = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _replay(args, out) -> int:
    ops = parse_trace(_read(args.trace))
    replayer = Replayer()
    quiet = args.command == "dot"
    for op in ops:
        lines = replayer.execute(op)
        if not quiet:
            for line in lines:
                out.write(line + "\n")
    if quiet:
        out.write(export_dot(replayer.graph, replayer.names))
    return EXIT_CHECK if replayer.check_failed else EXIT_OK


def _bench(args, out) -> int:
    ops = parse_trace(_read(args.trace))
    out.write(run_bench(ops, early_stop=args.early_stop).format())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyntopo",
        description="Replay graph operation traces against a cycle-tolerant dynamic topological order.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="replay a trace and print its output")
    run.add_argument("trace", help="trace file, or - for stdin")
    run.set_defaults(func=_replay)
    dot = sub.add_parser("dot", help="replay a trace and print the final graph as DOT")
    dot.add_argument("trace")
    dot.set_defaults(func=_replay)
    bench = sub.add_parser("bench", help="compare incremental replay with batch recomputation")
    bench.add_argument("trace")
    bench.add_argument(
        "--early-stop",
        action="store_true",
        help="abandon the batch replay once it is already slower than the incremental one",
    )
    bench.set_defaults(func=_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except TraceError as exc:
        out.flush()
        print(f"dyntopo: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"dyntopo: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
