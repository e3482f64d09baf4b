"""Command-line entry point of the experiment harness.

Usage:
    shannonlab <experiment> [--N INT] [--lambda LIST] [--m LIST]
        [--T-exp LIST] [--eps REAL] [--rho REAL] [--S INT] [--seed INT]
        [--draws INT] [--trials INT] [--out PATH] [--format {csv,tsv}]

Exit codes: 0 if every bound check passed, 1 if at least one failed, 2 on
configuration or output errors.
"""

import argparse
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import TypeVar

import structlog

from shannonlab.core.config import get_settings
from shannonlab.core.logging import configure_logging
from shannonlab.harness.errors import HarnessError
from shannonlab.harness.experiments import run_experiment
from shannonlab.harness.models import ExperimentName, ExperimentSpec
from shannonlab.harness.output import OutputFormat, write_summary, write_table

logger = structlog.get_logger(__name__)

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

_Item = TypeVar("_Item", int, float)


def _list_of(convert: Callable[[str], _Item]) -> Callable[[str], tuple[_Item, ...]]:
    def parse(text: str) -> tuple[_Item, ...]:
        items = [part.strip() for part in text.split(",") if part.strip()]
        try:
            return tuple(convert(item) for item in items)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"invalid list {text!r}") from exc

    return parse


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser; omitted options keep experiment defaults."""
    parser = argparse.ArgumentParser(
        prog="shannonlab",
        description="Reconstruct bandlimited test signals and check the "
        "measured errors against their theoretical bounds.",
    )
    parser.add_argument(
        "experiment",
        choices=[name.value for name in ExperimentName],
        help="Experiment to run",
    )
    parser.add_argument("--N", type=int, help="Bandwidth parameter")
    parser.add_argument(
        "--lambda",
        dest="lambdas",
        type=_list_of(float),
        help="Comma-separated oversampling parameters",
    )
    parser.add_argument(
        "--m",
        dest="m_values",
        type=_list_of(int),
        help="Comma-separated time-window truncation parameters",
    )
    parser.add_argument(
        "--T-exp",
        dest="T_exponents",
        type=_list_of(int),
        help="Comma-separated exponents c of T = 2^c",
    )
    parser.add_argument("--eps", dest="epsilon", type=float, help="Noise bound")
    parser.add_argument("--rho", type=float, help="Gaussian noise deviation")
    parser.add_argument("--S", type=int, help="Grid points on [-1, 1]")
    parser.add_argument("--seed", type=int, help="Random seed")
    parser.add_argument("--draws", type=int, help="Bounded-noise draws")
    parser.add_argument("--trials", type=int, help="Gaussian-noise trials")
    parser.add_argument(
        "--out", dest="output_path", type=Path, help="Result table path"
    )
    parser.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.CSV.value,
        help="Result table format (default: csv)",
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run one experiment from the command line.

    Args:
        argv: Arguments without the program name, sys.argv when None.

    Returns:
        The process exit code.
    """
    args = build_parser().parse_args(argv)
    settings = get_settings()
    configure_logging(
        json_format=settings.get_effective_log_json_format(),
        log_level=settings.log_level,
    )
    log = logger.bind(component="cli")
    try:
        spec = ExperimentSpec.resolve(
            ExperimentName(args.experiment),
            N=args.N,
            lambdas=args.lambdas,
            m_values=args.m_values,
            T_exponents=args.T_exponents,
            epsilon=args.epsilon,
            rho=args.rho,
            S=args.S,
            seed=args.seed,
            draws=args.draws,
            trials=args.trials,
            output_path=args.output_path,
        )
        rows, summary = run_experiment(spec)
        write_table(rows, spec.output_path, OutputFormat(args.format))
        if spec.output_path is not None:
            write_summary(summary, spec.output_path)
    except HarnessError as exc:
        log.error("harness_error", error=str(exc))
        return EXIT_ERROR
    if not summary.passed:
        log.warning("bound_checks_failed", failures=summary.failures)
        return EXIT_FAILED
    return EXIT_PASSED
