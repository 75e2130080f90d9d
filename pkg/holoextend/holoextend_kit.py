from argparse import ArgumentParser, Namespace
from typing import Optional

from .config import DEFAULT_CONFIG, LoggingConfig, SolverOptions, update_config
from .logging_config import get_logger, setup_logging

logger = get_logger(__name__)

# Global cached parser to avoid recreation
_CACHED_PARSER: Optional[ArgumentParser] = None

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


def _common_parser() -> ArgumentParser:
    """Flags shared by every subcommand."""
    common = ArgumentParser(add_help=False)
    debug_group = common.add_argument_group("Diagnostics")
    debug_group.add_argument("--log-level", type=str, default=DEFAULT_CONFIG["logging"]["level"], choices=LOG_LEVELS, help="Logging level on standard error.")
    debug_group.add_argument("--log-file", type=str, default=None, help="Also write log records to this file.")
    debug_group.add_argument("--seedless", action="store_true", help="Fail if any global random generator is touched.")
    debug_group.add_argument("--timing", action="store_true", help="Record wall time in reports (makes them non-reproducible).")
    return common


def _add_solver_arguments(parser: ArgumentParser) -> None:
    solver_group = parser.add_argument_group("Solver Configuration")
    solver_group.add_argument("--samples", type=int, default=None, help=f"Boundary samples per circle (default: {DEFAULT_CONFIG['solver']['boundary_samples']}).")
    solver_group.add_argument("--safety", type=float, default=None, help=f"Sampled |F| must stay below safety * M (default: {DEFAULT_CONFIG['solver']['safety']}).")


def _get_argument_parser() -> ArgumentParser:
    """Get cached argument parser or create new one."""
    global _CACHED_PARSER

    if _CACHED_PARSER is not None:
        return _CACHED_PARSER

    parser = ArgumentParser(prog="holoextend", description="Bounded holomorphic extensions on circle domains")
    common = _common_parser()
    subparsers = parser.add_subparsers(dest="command", required=True)

    solve = subparsers.add_parser("solve", parents=[common], help="Solve an extension problem file.")
    solve.add_argument("problem", type=str, help="Problem file (JSON).")
    io_group = solve.add_argument_group("Output")
    io_group.add_argument("--out", type=str, required=True, help="Result file (JSON).")
    io_group.add_argument("--report", type=str, default=None, help="Report file (default: <out>.report.json).")
    io_group.add_argument("--csv", type=str, default=None, help="Boundary samples of the result as CSV.")
    _add_solver_arguments(solve)

    decompose = subparsers.add_parser("decompose", parents=[common], help="Decompose an annular measure file.")
    decompose.add_argument("measure", type=str, help="Measure file (JSON).")
    decompose.add_argument("--out", type=str, required=True, help="Decomposition file (JSON).")
    decompose.add_argument("--csv", type=str, default=None, help="Coefficient table as CSV.")
    decompose.add_argument("--truncation", type=int, default=None, help=f"Truncation order J (default: {DEFAULT_CONFIG['measure']['truncation']}).")

    chart = subparsers.add_parser("map", parents=[common], help="Print the annulus chart of each hole against the outer circle.")
    chart.add_argument("domain", type=str, help="Domain or problem file (JSON).")
    chart.add_argument("--csv", type=str, default=None, help="Boundary correspondence as CSV.")
    chart.add_argument("--samples", type=int, default=64, help="Samples per circle in the CSV (default: 64).")

    verify = subparsers.add_parser("verify", parents=[common], help="Re-run all checks on a stored result.")
    verify.add_argument("result", type=str, help="Result file written by solve.")
    verify.add_argument("--report", type=str, default=None, help="Write the fresh report here.")
    verify.add_argument("--csv", type=str, default=None, help="Boundary samples (angle, F, |F|, M) as CSV.")
    _add_solver_arguments(verify)

    _CACHED_PARSER = parser
    return parser


def _validate_args(args: Namespace) -> None:
    """Validate argument values."""
    samples = getattr(args, "samples", None)
    if samples is not None and samples < 8:
        raise ValueError(f"samples must be at least 8, got {samples}")

    safety = getattr(args, "safety", None)
    if safety is not None and not (0 < safety < 1):
        raise ValueError(f"safety must lie in (0, 1), got {safety}")

    truncation = getattr(args, "truncation", None)
    if truncation is not None and truncation < 1:
        raise ValueError(f"truncation must be positive, got {truncation}")


def parse_args(argv=None) -> Namespace:
    """Parse and validate command line arguments."""
    args = _get_argument_parser().parse_args(argv)
    _validate_args(args)
    return args


def configure_logging(args: Namespace) -> None:
    setup_logging(args.log_level, args.log_file, force=True)
    update_config(logging=LoggingConfig(level=args.log_level, log_file=args.log_file))


def solver_options_from_args(base: SolverOptions, args: Namespace) -> SolverOptions:
    """Apply --samples and --safety to the options read from a file."""
    overrides = {}
    if getattr(args, "samples", None) is not None:
        overrides["boundary_samples"] = args.samples
    if getattr(args, "safety", None) is not None:
        overrides["safety"] = args.safety
    options = SolverOptions(**{**base.model_dump(), **overrides}) if overrides else base
    update_config(solver=options)
    if overrides:
        logger.info(f"Solver options overridden from the command line: {overrides}")
    return options
