import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .bench import load_bench_config, run_bench, write_csv
from .exceptions import (
    ConfigurationError,
    MonoqueueError,
    ParseError,
    ValidationError,
    VerificationError,
)
from .graph import format_dimacs, gen_grid, gen_path, gen_random, read_dimacs
from .models import Backend, QueueConfig
from .plot import plot_csv
from .sssp import bellman_ford, dijkstra, format_dump, verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY = 2
EXIT_IO = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoqueue", description="Monotone priority queues for shortest paths."
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="write a generated DIMACS graph")
    shape = gen.add_mutually_exclusive_group(required=True)
    shape.add_argument("--path", action="store_true")
    shape.add_argument("--grid", action="store_true")
    shape.add_argument("--random", action="store_true")
    gen.add_argument("--n", type=int, default=None)
    gen.add_argument("--m", type=int, default=None)
    gen.add_argument("--rows", type=int, default=None)
    gen.add_argument("--cols", type=int, default=None)
    gen.add_argument("--w", type=int, default=1, help="path arc weight")
    gen.add_argument("--w-min", type=int, default=1)
    gen.add_argument("--w-max", type=int, default=16)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    solve = commands.add_parser("solve", help="print shortest-path distances")
    solve.add_argument("graph")
    solve.add_argument("--source", type=int, default=1, help="1-based source vertex")
    solve.add_argument(
        "--backend", default=Backend.DIAL.value, choices=[b.value for b in Backend]
    )
    solve.add_argument("--k", type=int, default=2)
    solve.add_argument("--delta", type=int, default=4)
    solve.add_argument("--t", type=int, default=None)
    solve.add_argument("--p", type=int, default=1)
    solve.add_argument("--verify", action="store_true")

    bench = commands.add_parser("bench", help="run a benchmark matrix to CSV")
    bench.add_argument("config")
    bench.add_argument("--output", default=None)
    bench.add_argument("--threads", type=int, default=None)

    plot = commands.add_parser("plot", help="draw a benchmark CSV as SVG")
    plot.add_argument("csv")
    plot.add_argument("--x", default="C")
    plot.add_argument("--y", default="empty_scans")
    plot.add_argument("--group", default="backend")
    plot.add_argument("--log", action="store_true", help="log-log axes")
    plot.add_argument("-o", "--output", default="plot.svg")
    return parser


def cmd_gen(args) -> int:
    if args.path:
        graph = gen_path(_required(args.n, "--n"), args.w, args.seed)
    elif args.grid:
        graph = gen_grid(
            _required(args.rows, "--rows"), _required(args.cols, "--cols"),
            args.w_max, args.seed, args.w_min,
        )
    else:
        graph = gen_random(
            _required(args.n, "--n"), _required(args.m, "--m"), args.w_min, args.w_max, args.seed
        )
    text = format_dimacs(graph)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {graph!r} to {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _required(value: Optional[int], flag: str) -> int:
    if value is None:
        raise ValidationError(f"{flag} is required for this generator")
    return value


def cmd_solve(args) -> int:
    graph = read_dimacs(args.graph)
    if not 1 <= args.source <= graph.n:
        raise ValidationError("source outside [1, n]", {"source": args.source, "n": graph.n})
    source = args.source - 1
    config = QueueConfig(
        capacity_n=graph.n,
        max_key=0,
        k=args.k,
        delta=args.delta,
        hot_threshold=args.t,
        width_multiplier=args.p,
    )
    result = dijkstra(graph, source, args.backend, config)
    if args.verify:
        violations = verify(graph, source, result)
        reference = bellman_ford(graph, source)
        if reference.dist != result.dist:
            mismatched = [v for v in range(graph.n) if reference.dist[v] != result.dist[v]]
            violations.append(f"{len(mismatched)} distances differ from bellman-ford")
        if violations:
            raise VerificationError(f"{args.backend} result failed verification", violations)
    sys.stdout.write(format_dump(result.dist))
    logger.info(f"{args.backend} counters: {result.counters}")
    return EXIT_OK


def cmd_bench(args) -> int:
    config = load_bench_config(args.config)
    if args.output:
        config.output = args.output
    if args.threads is not None:
        config.threads = args.threads
        config.validate()
    rows = run_bench(config, threads=args.threads)
    write_csv(rows, config.output)
    return EXIT_OK


def cmd_plot(args) -> int:
    plot_csv(args.csv, args.output, args.x, args.y, args.group, args.log)
    return EXIT_OK


COMMANDS = {"gen": cmd_gen, "solve": cmd_solve, "bench": cmd_bench, "plot": cmd_plot}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except VerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        for violation in e.violations:
            print(f"  {violation}", file=sys.stderr)
        return EXIT_VERIFY
    except (ValidationError, ConfigurationError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_IO
    except MonoqueueError as e:
        logger.error(f"Unexpected failure: {e}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
