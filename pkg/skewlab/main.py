"""Main entry point for the skewlab command line tool."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import TYPE_CHECKING, Any

import setproctitle

from skewlab import __version__
from skewlab.exc import SkewlabError
from skewlab.inequalities import (
    check_theorem1,
    check_theorem2,
    compare_bounds,
    in_theorem1_domain,
    in_theorem2_domain,
)
from skewlab.models import SkewParams
from skewlab.quantities import evaluate_all
from skewlab.services import MatrixImporter, SweepService, VerificationService
from skewlab.settings import SettingsService, get_tolerances
from skewlab.types import ComputationPath, Family
from skewlab.utils import parse_int_list

if TYPE_CHECKING:
    from collections.abc import Sequence

    from skewlab.models import SweepRow

logger = logging.getLogger(__name__)

#: Exit codes
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2

LOG_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        msg = f"{text!r} is not an integer"
        raise argparse.ArgumentTypeError(msg) from e
    if value < 1:
        msg = f"{value} must be at least 1"
        raise argparse.ArgumentTypeError(msg)
    return value


def _int_list(text: str) -> list[int]:
    try:
        return parse_int_list(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser.

    Returns:
        The parser with one subcommand per operation

    """
    parser = argparse.ArgumentParser(
        prog="skewlab",
        description="Skew information quantities and their uncertainty relations.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="-v for progress, -vv for per-point detail",
    )
    parser.add_argument(
        "--threads",
        type=_positive_int,
        default=None,
        help=f"worker threads (default: ${SettingsService.THREADS_ENV} or settings)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="check every relation on random inputs")
    verify.add_argument("--dims", type=_int_list, default=[2, 3, 4])
    verify.add_argument("--samples", type=_positive_int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument(
        "--tol", type=float, default=None, help="relative slack tolerance"
    )
    verify.add_argument("--report", type=Path, default=None, help="report JSON path")
    verify.set_defaults(handler=cmd_verify)

    sweep = commands.add_parser("sweep", help="sweep a state family parameter")
    sweep.add_argument("--family", choices=[f.value for f in Family], required=True)
    sweep.add_argument("--start", type=float, default=0.0)
    sweep.add_argument("--end", type=float, default=1.0)
    sweep.add_argument("--steps", type=_positive_int, default=101)
    sweep.add_argument("--alpha", type=float, required=True)
    sweep.add_argument("--beta", type=float, required=True)
    sweep.add_argument("--out", type=Path, default=None, help="CSV path (stdout if omitted)")
    sweep.set_defaults(handler=cmd_sweep)

    grid = commands.add_parser("grid", help="alpha-beta grid at a fixed state")
    grid.add_argument("--family", choices=[f.value for f in Family], required=True)
    grid.add_argument("--param", type=float, required=True)
    grid.add_argument("--alpha-steps", type=_positive_int, default=50)
    grid.add_argument("--beta-steps", type=_positive_int, default=50)
    grid.add_argument("--out", type=Path, default=None, help="CSV path (stdout if omitted)")
    grid.set_defaults(handler=cmd_grid)

    compute = commands.add_parser("compute", help="evaluate every quantity")
    compute.add_argument("--state", type=Path, required=True)
    compute.add_argument("--op-a", type=Path, required=True)
    compute.add_argument("--op-b", type=Path, default=None)
    compute.add_argument("--alpha", type=float, required=True)
    compute.add_argument("--beta", type=float, required=True)
    compute.add_argument(
        "--path",
        choices=[p.value for p in ComputationPath],
        default=ComputationPath.TRACE_FORMULA.value,
    )
    compute.set_defaults(handler=cmd_compute)

    figures = commands.add_parser("figures", help="write every published dataset")
    figures.add_argument("--out-dir", type=Path, default=Path("figures"))
    figures.add_argument("--steps", type=_positive_int, default=101)
    figures.add_argument("--grid-steps", type=_positive_int, default=50)
    figures.set_defaults(handler=cmd_figures)
    return parser


def _threads(args: argparse.Namespace) -> int:
    return SettingsService().threads(args.threads)


def _write_rows(service: SweepService, rows: list[SweepRow], out: Path | None) -> None:
    if out is None:
        service.write_csv(rows, sys.stdout)
    else:
        service.write_csv(rows, out)
        logger.info(f"Wrote {len(rows)} rows to {out!s}")


def cmd_verify(args: argparse.Namespace) -> int:
    """Run the randomized verification suite."""
    tolerances = get_tolerances()
    if args.tol is not None:
        tolerances = replace(tolerances, slack_relative=args.tol)
    service = VerificationService(threads=_threads(args), tolerances=tolerances)
    report = service.run(args.dims, args.samples, args.seed)
    if args.report is not None:
        service.write_report(report, args.report)
        logger.info(f"Wrote verification report to {args.report!s}")
    json.dump(report["summary"], sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK if service.all_passed(report) else EXIT_VIOLATION


def cmd_sweep(args: argparse.Namespace) -> int:
    """Sweep a family parameter at one exponent pair."""
    service = SweepService(threads=_threads(args))
    rows = service.sweep(
        args.family, args.start, args.end, args.steps, [(args.alpha, args.beta)]
    )
    _write_rows(service, rows, args.out)
    return EXIT_OK


def cmd_grid(args: argparse.Namespace) -> int:
    """Evaluate an alpha-beta grid at one family parameter."""
    service = SweepService(threads=_threads(args))
    rows = service.grid(args.family, args.param, args.alpha_steps, args.beta_steps)
    _write_rows(service, rows, args.out)
    return EXIT_OK


def cmd_compute(args: argparse.Namespace) -> int:
    """Evaluate every quantity on matrices read from Matrix JSON files."""
    importer = MatrixImporter()
    rho = importer.read_state(args.state)
    a = importer.read_operator(args.op_a)
    b = importer.read_operator(args.op_b) if args.op_b is not None else None
    params = SkewParams(args.alpha, args.beta)
    path = ComputationPath(args.path)
    output: dict[str, Any] = {
        "alpha": params.alpha,
        "beta": params.beta,
        "path": path.value,
        "hermitian": {
            label: op.is_hermitian()
            for label, op in (("A", a), ("B", b))
            if op is not None
        },
        "quantities": evaluate_all(rho, a, b, params, path=path),
    }
    if b is not None:
        checks: dict[str, Any] = {}
        for name, check, in_domain in (
            ("theorem1", check_theorem1, in_theorem1_domain),
            ("theorem2", check_theorem2, in_theorem2_domain),
        ):
            checks[name] = check(rho, a, b, params).to_json() if in_domain(params) else None
        checks["compare_bounds"] = compare_bounds(params).value
        output["checks"] = checks
    json.dump(output, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_figures(args: argparse.Namespace) -> int:
    """Write the data behind every published sweep and grid."""
    service = SweepService(threads=_threads(args))
    written = service.figures(args.out_dir, steps=args.steps, grid_steps=args.grid_steps)
    for path in written.values():
        sys.stdout.write(f"{path!s}\n")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the skewlab command line tool.

    Args:
        argv: Arguments without the program name; ``sys.argv[1:]`` if None

    Returns:
        0 when everything holds, 1 when a relation fails, 2 on usage,
        input or I/O errors

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_ERROR
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    setproctitle.setproctitle(f"skewlab {args.command}")
    try:
        return args.handler(args)
    except (SkewlabError, OSError, ValueError) as e:
        sys.stderr.write(f"skewlab: {type(e).__name__}: {e}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
