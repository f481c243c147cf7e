import argparse
import logging
import sys
from collections.abc import Sequence
from dataclasses import replace
from pathlib import Path
from typing import cast

from polygen import __version__
from polygen.cli.commands import (
    EXIT_CONFIG,
    EXIT_NUMERICAL,
    CommandResult,
    cmd_detect_period,
    cmd_reproduce,
    cmd_simulate,
    cmd_sweep,
    cmd_verify,
    verify_presets,
)
from polygen.cli.config import (
    FORMATS,
    RunConfig,
    load_run_config,
    load_sweep_config,
    preset,
)
from polygen.constants.presets import PRESETS
from polygen.constants.tolerances import ASYMPTOTIC_PERIOD_TOL, EXACT_PERIOD_TOL
from polygen.constants.types import OutputFormat
from polygen.converters.json_converter import dumps_report
from polygen.errors import ConfigError, PolygenError, UnknownPresetError

logger = logging.getLogger("polygen")


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _formats(args: argparse.Namespace) -> list[OutputFormat] | None:
    return cast(list[OutputFormat] | None, args.format)


def _run_config(args: argparse.Namespace) -> RunConfig:
    if args.config is not None and args.preset is not None:
        raise ConfigError("Use either --config or --preset, not both")
    if args.config is not None:
        config = load_run_config(args.config)
    elif args.preset is not None:
        config = RunConfig.from_preset(preset(args.preset))
    else:
        raise ConfigError("A run needs --config <path> or --preset <name>")
    return config.with_overrides(
        steps=args.steps, tol=args.tol, out=args.out, formats=_formats(args)
    )


def run_simulate(args: argparse.Namespace) -> CommandResult:
    return cmd_simulate(_run_config(args))


def run_verify(args: argparse.Namespace) -> CommandResult:
    if args.all:
        if args.config is not None or args.preset is not None:
            raise ConfigError("--all runs every preset; drop --config and --preset")
        return verify_presets(list(PRESETS), args.tol)
    config = _run_config(args)
    if args.format is None and args.out is None:
        config = replace(config, output=replace(config.output, formats=()))
    return cmd_verify(config)


def run_reproduce(args: argparse.Namespace) -> CommandResult:
    names = ["all"] if args.all else list(args.presets)
    if not names:
        raise ConfigError("Name at least one preset or pass --all")
    for name in names:
        if name != "all":
            preset(name)
    return cmd_reproduce(names, args.out or Path("out"), _formats(args))


def run_sweep(args: argparse.Namespace) -> CommandResult:
    if args.config is None:
        raise ConfigError("sweep needs --config <path>")
    config = load_sweep_config(args.config)
    if args.steps is not None:
        config = replace(config, steps=args.steps)
    if args.tol is not None:
        config = replace(config, analysis=replace(config.analysis, tol=args.tol))
    if args.out is not None:
        config = replace(config, output=replace(config.output, directory=args.out))
    if args.format:
        config = replace(
            config, output=replace(config.output, formats=tuple(_formats(args) or ()))
        )
    return cmd_sweep(config)


def run_detect_period(args: argparse.Namespace) -> CommandResult:
    return cmd_detect_period(
        args.trajectory,
        args.max_period,
        args.tol if args.tol is not None else EXACT_PERIOD_TOL,
        asymptotic_tol=args.asymptotic_tol,
        ordered=args.ordered,
        out=args.out,
    )


def _add_global_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="JSON configuration (schema 1)")
    parser.add_argument("--out", type=Path, help="output directory")
    parser.add_argument("--tol", type=float, help="exact-period / verify tolerance")
    parser.add_argument("--steps", type=int, help="number of time steps")
    parser.add_argument(
        "--format",
        action="append",
        choices=FORMATS,
        help="output format, repeatable (default: all)",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v info, -vv debug"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polygen",
        description="Solvable polynomial-zero dynamical systems: simulate, "
        "verify, reproduce reference examples and sweep parameters.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    _add_global_options(parser)
    commands = parser.add_subparsers(dest="command", required=True)
    preset_names = list(PRESETS)

    simulate = commands.add_parser("simulate", help="solve a run and report its period")
    simulate.add_argument("--preset", choices=preset_names)
    simulate.set_defaults(handler=run_simulate)

    verify = commands.add_parser("verify", help="check mode equivalence and identities")
    verify.add_argument("--preset", choices=preset_names)
    verify.add_argument("--all", action="store_true", help="every preset")
    verify.set_defaults(handler=run_verify)

    reproduce = commands.add_parser(
        "reproduce", help="write data and figures of presets"
    )
    reproduce.add_argument("presets", nargs="*", metavar="PRESET")
    reproduce.add_argument("--all", action="store_true", help="every preset")
    reproduce.set_defaults(handler=run_reproduce)

    sweep = commands.add_parser("sweep", help="classify a grid of multipliers")
    sweep.set_defaults(handler=run_sweep)

    detect = commands.add_parser(
        "detect-period", help="period report of a trajectory CSV"
    )
    detect.add_argument("trajectory", type=Path)
    detect.add_argument("--max-period", type=int, default=30)
    detect.add_argument("--asymptotic-tol", type=float, default=ASYMPTOTIC_PERIOD_TOL)
    detect.add_argument(
        "--ordered", action="store_true", help="compare columns, not sets"
    )
    detect.set_defaults(handler=run_detect_period)
    return parser


def headline(result: CommandResult) -> str:
    report = result.report
    lines = [str(path) for path in result.outputs]
    compact = {
        key: report[key]
        for key in ("passed", "checks", "summary", "matches_expected")
        if key in report
    }
    period = report.get("period")
    if isinstance(period, dict):
        compact["verdict"] = period.get("verdict")
        compact["period"] = period.get("period")
    presets = report.get("presets")
    if isinstance(presets, dict):
        compact["presets"] = {
            name: {
                key: value
                for key, value in cast(dict[str, object], entry).items()
                if key in ("matches_expected", "passed")
            }
            for name, entry in presets.items()
        }
    lines.append(dumps_report(compact).rstrip())
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        result = args.handler(args)
    except (ConfigError, UnknownPresetError) as error:
        logger.error("%s", error)
        return EXIT_CONFIG
    except PolygenError as error:
        logger.error("%s: %s", type(error).__name__, error)
        return EXIT_NUMERICAL
    print(headline(result))
    return int(result.exit_code)


if __name__ == "__main__":
    sys.exit(main())
