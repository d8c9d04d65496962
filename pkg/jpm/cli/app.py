import argparse
import logging

from pydantic import ValidationError

from jpm import __version__
from jpm.cli.views import bench_command, index_command, query_command
from jpm.errors import IndexFormatError, JPMError, TextFormatError
from jpm.log import setup_logging, stderr_console
from jpm.models import BackendChoices, QueryModeChoices, QueryModelChoices, TextFormatChoices

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _choices(enum) -> list[str]:
    return [member.value for member in enum]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jpm", description="Jumbled (Parikh vector) pattern matching")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    index = commands.add_parser("index", help="build and save an index over a text file")
    index.add_argument("--input", required=True, help="plain or FASTA text file")
    index.add_argument("--format", choices=_choices(TextFormatChoices), default=TextFormatChoices.PLAIN.value)
    index.add_argument("--backend", choices=_choices(BackendChoices), default=BackendChoices.TABLE.value)
    index.add_argument("--output", help="index file (default: <input>.jpmx)")
    index.add_argument("--alphabet", help="fix the alphabet explicitly, e.g. ACGT")
    index.add_argument("--concatenate", action="store_true", help="join all FASTA records into one text")
    index.add_argument("--eager", action="store_true", help="fill the whole interval table at build time")

    query = commands.add_parser("query", help="answer a Parikh vector query against a saved index")
    query.add_argument("--index", "--input", dest="index", required=True, help="index file written by 'jpm index'")
    query.add_argument("--query", required=True, help="'a=3 b=1 c=2' or positional counts '3 1 2'")
    query.add_argument("--mode", choices=_choices(QueryModeChoices), default=QueryModeChoices.OCCURRENCES.value)
    query.add_argument("--trace", action="store_true", help="print the (L, R, found) sequence to stderr")

    bench = commands.add_parser("bench", help="run jump-count experiments and emit CSV")
    bench.add_argument("--n", type=int, default=100_000)
    bench.add_argument("--sigma", type=int, default=4)
    bench.add_argument("--text", help="benchmark on this text (random queries only)")
    bench.add_argument("--format", choices=_choices(TextFormatChoices), default=TextFormatChoices.PLAIN.value)
    bench.add_argument("--backend", action="append", choices=_choices(BackendChoices), help="repeatable; default table")
    bench.add_argument("--m-lo", type=int)
    bench.add_argument("--m-hi", type=int)
    bench.add_argument("--m-points", type=int)
    bench.add_argument("--m-values", type=int, nargs="+", help="explicit query lengths")
    bench.add_argument("--query-model", choices=_choices(QueryModelChoices), default=QueryModelChoices.QUASI_BALANCED.value)
    bench.add_argument("--epsilon", type=int, default=10)
    bench.add_argument("--reps", type=int, help="random texts per query length")
    bench.add_argument("--queries-per-text", type=int)
    bench.add_argument("--seed", type=int, help="PRNG seed (falls back to PM_SEED)")
    bench.add_argument("--baseline", action="store_true", help="also run and verify against the window scan")
    bench.add_argument("--no-timing", action="store_true", help="drop timing columns for byte-stable output")
    bench.add_argument("--workers", type=int)
    bench.add_argument("--trend", action="store_true", help="fit the jump-count trend and report it on stderr")
    bench.add_argument("--output", help="CSV file (default: stdout)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging("DEBUG" if args.verbose else None)

    try:
        if args.command == "index":
            return index_command(args)

        elif args.command == "query":
            return query_command(args)

        elif args.command == "bench":
            return bench_command(args)

        else:
            parser.error(f"unknown command {args.command!r}")

    except (OSError, IndexFormatError, TextFormatError) as e:
        logger.debug("I/O failure", exc_info=True)
        stderr_console.print(f"error: {e}", markup=False)
        return EXIT_IO

    except (JPMError, ValidationError, ValueError) as e:
        logger.debug("Usage failure", exc_info=True)
        stderr_console.print(f"error: {e}", markup=False)
        return EXIT_USAGE
