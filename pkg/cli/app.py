"""
OneCenter command line
Subcommands: solve, gen, verify, bench. Results go to standard output,
logs and diagnostics to standard error.
"""

import argparse
import sys
from typing import List, Optional

from core.config_manager import ConfigManager, get_config, set_config
from core.errors import OneCenterError
from core.logger import Logger, get_logger

from .constants import (
    ALGO_CHOICES, APP_TITLE, APP_VERSION, EXIT_USAGE, GADGET_CHOICES, MODE_CHOICES,
    OBJECTIVE_CHOICES, SUITE_CHOICES,
)
from .controllers.command_controller import CommandController


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    # SUPPRESS: never overwrite the top-level value
    parser.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker threads (0 = all cores)")
    parser.add_argument("--log-file", default=argparse.SUPPRESS, help="write this run's log history to a file")


def _add_solver_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--metric", help="override the file's metric (l1, l2, lp:3, linf, hamming, edit, ulam)")
    parser.add_argument("--objective", choices=OBJECTIVE_CHOICES, default="center")
    parser.add_argument("--algo", choices=ALGO_CHOICES, default="auto")
    parser.add_argument("--eps", type=float, default=None, help="approximation slack for ulam-approx")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onecenter",
        description=f"{APP_TITLE} {APP_VERSION}: exact and approximate discrete 1-center solvers",
    )
    parser.add_argument("--version", action="version", version=f"{APP_TITLE} {APP_VERSION}")
    parser.add_argument("--config", help="JSON configuration file")
    parser.add_argument("--threads", type=int, default=None, help="worker threads (0 = all cores)")
    parser.add_argument("--log-file", default=None, help="write this run's log history to a file")
    noise = parser.add_mutually_exclusive_group()
    noise.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    noise.add_argument("-q", "--quiet", action="store_true", help="errors only")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one instance file")
    _add_run_options(solve)
    solve.add_argument("input")
    _add_solver_options(solve)
    solve.add_argument("--eccentricities", action="store_true", help="include every eccentricity")
    solve.add_argument("-o", "--output")

    gen = sub.add_parser("gen", help="generate an instance file")
    _add_run_options(gen)
    gen.add_argument("--gadget", choices=GADGET_CHOICES, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--n", type=int)
    gen.add_argument("--m", type=int, help="universe size or string length")
    gen.add_argument("--d", type=int, help="dimension / permutation length / bit-vector length")
    gen.add_argument("--mode", choices=MODE_CHOICES)
    gen.add_argument("--density", type=float)
    gen.add_argument("--p", type=float, help="l_p exponent for hsc-lp (0 = Hamming)")
    gen.add_argument("--low", type=int)
    gen.add_argument("--high", type=int)
    gen.add_argument("--moves", type=int, help="random moves from the identity (random-perms)")
    gen.add_argument("--flips", type=int, help="bits flipped from a shared base vector")
    gen.add_argument("--bits", nargs="+", help="explicit bit vectors for ham2ulam / ham2edit")
    gen.add_argument("--facilities", nargs="+", help="facility bit strings for pad-edit")
    gen.add_argument("--clients", nargs="+", help="client bit strings for pad-edit")
    gen.add_argument("--metric", help="metric tag for random-points")
    gen.add_argument("--input", help="hitting-set file to convert (hsc-lp)")
    gen.add_argument("-o", "--output")

    verify = sub.add_parser("verify", help="check an algorithm against the brute-force oracle")
    _add_run_options(verify)
    verify.add_argument("inputs", nargs="+")
    _add_solver_options(verify)

    bench = sub.add_parser("bench", help="run a timing suite and print CSV")
    _add_run_options(bench)
    bench.add_argument("--suite", choices=SUITE_CHOICES, required=True)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--n", type=int)
    bench.add_argument("--d", type=int)
    bench.add_argument("--sizes", type=int, nargs="+")
    bench.add_argument("--brute-sizes", type=int, nargs="+")
    bench.add_argument("--reps", type=int, default=3)
    bench.add_argument("--moves", type=int)
    bench.add_argument("-o", "--output")
    return parser


def _configure(args) -> None:
    if args.config:
        set_config(ConfigManager(args.config))
    logger = get_logger()
    if args.verbose:
        logger.set_level(Logger.LEVEL_DEBUG)
    elif args.quiet:
        logger.set_level(Logger.LEVEL_ERROR)
    else:
        logger.set_level(get_config().log_level)


def run_app(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the subcommand and return the process exit code."""
    args = build_parser().parse_args(argv)
    logger = get_logger()
    if args.log_file:
        logger.clear()
    try:
        _configure(args)
        controller = CommandController(args.threads)
        return getattr(controller, args.command)(args)
    except OneCenterError as e:
        logger.error(f"{e.code}: {e}")
        if not logger.echo:
            print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_USAGE
    finally:
        if args.log_file:
            logger.save_to_file(args.log_file)
