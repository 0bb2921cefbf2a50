"""Command line for generating instances, solving them and reproducing the tables."""
from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from pybregman.__version__ import __version__
from pybregman.errors import BregmanError
from pybregman.problems import MatrixKind, SignalKind
from pybregman.prox import ObjectiveKind
from pybregman.solvers import McShrinkArg, TauRule, Variant

from . import const
from .commands import cmd_gen, cmd_repro, cmd_solve, cmd_verify
from .models import ExperimentConfig

_LOGGER = logging.getLogger(__name__)

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

COMMANDS: dict[str, Callable[[ExperimentConfig], int]] = {
    "gen": cmd_gen,
    "bp": lambda config: cmd_solve(config, "bp"),
    "mc": lambda config: cmd_solve(config, "mc"),
    "verify": cmd_verify,
    "repro-table1": lambda config: cmd_repro(config, 1),
    "repro-table2": lambda config: cmd_repro(config, 2),
}


def _values(enum: type) -> list[str]:
    return [member.value for member in enum]


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    common.add_argument("--config", type=Path, help="JSON experiment config; flags win")
    common.add_argument("--out", type=Path, help="output directory")
    common.add_argument("--seed", type=int, help="random seed")
    common.add_argument("--max-iters", dest="max_iters", type=int, help="iteration cap")
    return common


def _instance_parser() -> argparse.ArgumentParser:
    instance = argparse.ArgumentParser(add_help=False)
    instance.add_argument("--instance", type=Path, help="instance file written by gen")
    instance.add_argument("--matrix", choices=_values(MatrixKind))
    instance.add_argument("--signal", choices=_values(SignalKind))
    instance.add_argument("--n", type=int, help="signal length or matrix dimension")
    instance.add_argument("--m", type=int, help="measurements (default 0.4 n)")
    instance.add_argument("--s", type=int, help="sparsity (default 0.2 m)")
    instance.add_argument("--rank", type=int, help="rank of the completion target")
    instance.add_argument("--fr", type=float, help="degrees-of-freedom ratio")
    instance.add_argument("--mu", type=float, help="regularization parameter")
    return instance


def _solver_parser() -> argparse.ArgumentParser:
    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument("--variant", choices=_values(Variant))
    solver.add_argument("--tau", type=float, help="explicit step length")
    solver.add_argument("--tau-rule", dest="tau_rule", choices=_values(TauRule))
    solver.add_argument("--schedule", help="tseng or constant:<alpha>")
    solver.add_argument("--tol", type=float, help="relative residual tolerance")
    solver.add_argument("--objective", choices=_values(ObjectiveKind))
    solver.add_argument("--mc-shrink-arg", dest="mc_shrink_arg", choices=_values(McShrinkArg))
    solver.add_argument(
        "--record-time",
        dest="record_time",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="record wall-clock nanoseconds in the trace",
    )
    return solver


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with one subcommand per experiment."""
    parser = argparse.ArgumentParser(
        prog="pybregman",
        description="Linearized Bregman solvers for basis pursuit and matrix completion.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)
    common, instance, solver = _common_parser(), _instance_parser(), _solver_parser()

    gen = commands.add_parser("gen", parents=[common, instance], help="generate an instance")
    gen.add_argument("problem", choices=("bp", "mc"))
    commands.add_parser("bp", parents=[common, instance, solver], help="solve basis pursuit")
    commands.add_parser("mc", parents=[common, instance, solver], help="solve matrix completion")
    verify = commands.add_parser("verify", parents=[common], help="run the verify suites")
    verify.add_argument(
        "--suite",
        choices=("equivalence", "rates", "prox", "gradient", "constrained", "all"),
    )
    table1 = commands.add_parser("repro-table1", parents=[common], help="compressed sensing grid")
    table1.add_argument("--scale", type=float, help="factor applied to n, in (0, 1]")
    table2 = commands.add_parser("repro-table2", parents=[common], help="matrix completion grid")
    table2.add_argument("--scale", type=float, help="factor applied to n, in (0, 1]")
    table2.add_argument("--max-n", dest="max_n", type=int, help="largest n of the grid")
    return parser


def load_experiment(args: argparse.Namespace) -> ExperimentConfig:
    """Merge the optional config file with the command-line flags."""
    base = ExperimentConfig.parse_file(args.config) if args.config else ExperimentConfig()
    fields = ExperimentConfig.__fields__
    overrides = {key: value for key, value in vars(args).items() if key in fields}
    return base.merged(overrides)


def main(argv: Sequence[str] | None = None) -> int:
    """Run the pybregman command line.

    Returns
    -------
        0 converged or passed, 1 usage or configuration error, 2 iteration cap.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exit_request:
        # argparse exits with 2 on usage errors, which is reserved for the iteration cap
        return const.EXIT_CONVERGED if exit_request.code in (0, None) else const.EXIT_ERROR
    logging.basicConfig(
        level=LOG_LEVELS[min(args.verbose, len(LOG_LEVELS) - 1)],
        format=const.LOG_FORMAT,
    )
    try:
        config = load_experiment(args)
        return COMMANDS[args.command](config)
    except (BregmanError, ValueError, OSError) as exception:
        _LOGGER.debug("Command %s failed", args.command, exc_info=True)
        print(f"error: {exception}", file=sys.stderr)
        return const.EXIT_ERROR


__all__ = ["build_parser", "load_experiment", "main"]
