#!/usr/bin/env python3

import argparse
import pathlib
import sys
import time
from typing import Optional

from .bench.job import Job
from .bench.jobs import Jobs
from .bench.output import FORMATS, render, to_csv, to_json, write_output
from .bench.parameters import JobParameters
from .config import config
from .config.parsing import parse_count, parse_grid
from .exact.tail import TailMode
from .simulator.seeding import DEFAULT_SEED
from .utils import helpers as h
from .utils.runlogging import init_logging


def count_arg(text: str) -> int:
    """Custom argparse type for counts, 1000000 or 1e6"""
    try:
        return parse_count(text)
    except h.ParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def grid_arg(text: str) -> list[int]:
    """Custom argparse type for n grids, 1e3,1e4,1e5"""
    try:
        grid = parse_grid(text)
    except h.ParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if not grid:
        raise argparse.ArgumentTypeError("empty grid")
    return grid


def seed_arg(text: str) -> int:
    """Custom argparse type for seeds, decimal or 0x prefixed"""
    try:
        seed = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text} is not an integer seed")
    if seed < 0:
        raise argparse.ArgumentTypeError(f"{text} must be >= 0")
    return seed


def run_single(parser: argparse.ArgumentParser, args: argparse.Namespace):
    """Run one sub-command as a single job and write its rows."""
    params = JobParameters.from_args(args)
    job = Job(0, config.load_engine(args.command), params)
    error = job.check_parameters()
    if error:
        parser.error(f"{args.command}: {error}")
    result = job.run()
    write_output(render(result, params.get_format()), args.output)


def run_campaign(parser: argparse.ArgumentParser, args: argparse.Namespace):
    """Run every job of a campaign file into an output directory."""
    campaign = config.Config(args.config)
    out_dir = pathlib.Path(
        args.outdir or f"embtree-out-{time.strftime('%Y%m%d%H%M%S')}"
    )
    jobs = Jobs(out_dir, campaign)
    jobs.parse_config()
    out_dir.mkdir(parents=True, exist_ok=True)
    results = jobs.run()
    jobs.dump()

    for job in jobs.get_jobs():
        key = jobs.job_key(job)
        if job.get_parameters().get_format() == "csv":
            (out_dir / f"{key}.csv").write_text(to_csv(results[key]))
    out = {
        "config": jobs.get_config().to_dict(),
        "jobs": {key: result.to_dict() for key, result in results.items()},
    }
    write_output(to_json(out), out_dir / "results.json")


def add_common_options(subparser: argparse.ArgumentParser):
    subparser.add_argument(
        "--format",
        help="Output format",
        choices=FORMATS,
        default="csv",
    )
    subparser.add_argument(
        "--output", type=pathlib.Path, help="Output file (default: stdout)"
    )
    subparser.add_argument(
        "--workers",
        type=count_arg,
        help="Worker processes (default: $EMBTREE_WORKERS or 1)",
    )


def add_ensemble_options(subparser: argparse.ArgumentParser, d_only: bool = False):
    if not d_only:
        subparser.add_argument("--n", type=count_arg, help="Number of vertices")
    subparser.add_argument("--d", type=count_arg, help="Degree")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="embtree",
        description="Embedded regular trees in random regular graphs: "
        "exact tail laws, limits and simulation",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    parser.add_argument("--verbose", action="store_true", help="Enable verbose mode")
    parser.add_argument(
        "--log-file", type=pathlib.Path, help="Write JSON logs to this file"
    )
    subparsers = parser.add_subparsers(
        dest="command", required=True, help="embtree sub-commands"
    )
    modes = [str(mode) for mode in TailMode]

    parser_tail = subparsers.add_parser("tail", help="P(X >= k) table")
    add_ensemble_options(parser_tail)
    parser_tail.add_argument("--k", type=count_arg, help="A single tree size")
    parser_tail.add_argument("--k-max", type=count_arg, help="Last tree size")
    parser_tail.add_argument("--mode", choices=modes, help="exact (default) or log")
    add_common_options(parser_tail)
    parser_tail.set_defaults(func=run_single)

    parser_expect = subparsers.add_parser(
        "expect", help="E(X), the 2F1 identity and E(X)/sqrt(n)"
    )
    add_ensemble_options(parser_expect)
    parser_expect.add_argument("--mode", choices=modes, help="exact (default) or log")
    parser_expect.add_argument(
        "--grid", type=grid_arg, help="n grid for E(X)/sqrt(n) against c(d)"
    )
    add_common_options(parser_expect)
    parser_expect.set_defaults(func=run_single)

    parser_limit = subparsers.add_parser(
        "limit", help="Finite-n values against the limit laws"
    )
    add_ensemble_options(parser_limit, d_only=True)
    parser_limit.add_argument("--rho", type=float, help="Exponent of k = n^rho")
    parser_limit.add_argument("--x", type=float, help="Scale of k = x sqrt(n)")
    parser_limit.add_argument(
        "--scaled", action="store_true", help="Scaled tail law (needs --x)"
    )
    parser_limit.add_argument(
        "--grid", type=grid_arg, help="n grid (default: 1e3,1e4,1e5,1e6)"
    )
    add_common_options(parser_limit)
    parser_limit.set_defaults(func=run_single)

    parser_simulate = subparsers.add_parser("simulate", help="Monte Carlo sampling")
    add_ensemble_options(parser_simulate)
    parser_simulate.add_argument("--trials", type=count_arg, help="Number of trials")
    parser_simulate.add_argument(
        "--seed", type=seed_arg, help=f"Master seed (default: {DEFAULT_SEED:#x})"
    )
    parser_simulate.add_argument(
        "--radius",
        action="store_true",
        help="Sample configurations and measure the embedded tree radius",
    )
    add_common_options(parser_simulate)
    parser_simulate.set_defaults(func=run_single)

    parser_enumerate = subparsers.add_parser(
        "enumerate", help="Exact laws by exhaustive enumeration (d*n <= 14)"
    )
    add_ensemble_options(parser_enumerate)
    parser_enumerate.add_argument("--root", type=int, help="Root vertex (default 0)")
    parser_enumerate.add_argument(
        "--radius", action="store_true", help="Law of the embedded tree radius"
    )
    add_common_options(parser_enumerate)
    parser_enumerate.set_defaults(func=run_single)

    parser_run = subparsers.add_parser("run", help="Run a campaign file")
    parser_run.add_argument(
        "-c", "--config", help="Specify the config file to load", required=True
    )
    parser_run.add_argument("--outdir", help="Name of the output directory")
    parser_run.set_defaults(func=run_campaign)

    return parser


def main(argv: Optional[list[str]] = None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:] if len(sys.argv) > 1 else ["--help"]
    args = parser.parse_args(argv)

    # configure logging
    init_logging(args.log_file, args.verbose)

    try:
        args.func(parser, args)
    except h.EmbtreeError as exc:
        h.fatal(str(exc))


if __name__ == "__main__":
    # don't add anything here setup.py points at main()
    main()
