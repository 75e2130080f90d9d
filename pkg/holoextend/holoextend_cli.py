"""Command-line entry point: ``holoextend {solve,decompose,map,verify}``.

Exit codes: 0 when everything verified, 1 when the input could not be read or
does not describe a valid problem, 2 when a solver fails or a verification
check does not pass. Diagnostics on standard error start with the exception
class name.
"""

import random
import sys
import time
from argparse import Namespace
from typing import Callable, Dict

import numpy as np
from pydantic import ValidationError

from .config import get_measure_config
from .conformal.moebius import annulus_chart
from .errors import GeometryError, HoloExtendError, InvalidMeasure, ProblemError, RandomnessUsed, TruncationInsufficient, VerificationFailed
from .fileio.file_handlers import (
    BOUNDARY_CSV_HEADER,
    COEFFICIENT_CSV_PIECES,
    CORRESPONDENCE_CSV_HEADER,
    default_report_path,
    format_number,
    read_model,
    write_csv,
    write_model,
)
from .fileio.schemas import DomainFile, MeasureFile, ProblemFile, ResultFile
from .fileio.serialization import (
    boundary_rows,
    circle_from_spec,
    decomposition_to_file,
    measure_from_file,
    problem_from_file,
    result_from_file,
    result_to_file,
)
from .geometry.domain import sample_boundary
from .holoextend_kit import configure_logging, parse_args, solver_options_from_args
from .logging_config import get_logger
from .measures.circle_measure import fourier_coefficient
from .measures.decomposition import decompose
from .solvers.checks import verify_extension
from .solvers.gluing import solve_problem
from .solvers.solver_monitor import get_solver_monitor

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FAILURE = 2

INPUT_ERRORS = (FileNotFoundError, IsADirectoryError, UnicodeDecodeError, ValidationError, GeometryError, ProblemError, InvalidMeasure, TruncationInsufficient)


def _diagnose(error: BaseException) -> None:
    print(f"{type(error).__name__}: {error}", file=sys.stderr)


# =============================================================================
# Subcommands
# =============================================================================


def cmd_solve(args: Namespace) -> int:
    problem_file = read_model(args.problem, ProblemFile)
    problem, options = problem_from_file(problem_file)
    options = solver_options_from_args(options, args)

    monitor = get_solver_monitor()
    monitor.reset()
    start = time.perf_counter()
    result = solve_problem(problem, options)
    elapsed = time.perf_counter() - start

    update = {"solver_rounds": monitor.totals()}
    if args.timing:
        update["wall_time"] = elapsed
    result.report = result.report.model_copy(update=update)

    write_model(args.out, result_to_file(problem_file, options, result))
    write_model(args.report or default_report_path(args.out), result.report)
    if args.csv:
        write_csv(args.csv, BOUNDARY_CSV_HEADER, boundary_rows(problem, result.F, options.boundary_samples))

    logger.debug(monitor.generate_report())
    if not result.report.passed:
        raise VerificationFailed("; ".join(result.report.failures))
    logger.info(f"✅ Solved {result.kind} problem, interpolation residual {result.report.interpolation_residual:.3e}")
    return EXIT_OK


def cmd_decompose(args: Namespace) -> int:
    measure = measure_from_file(read_model(args.measure, MeasureFile))
    config = get_measure_config()
    truncation = args.truncation or config.truncation

    decomposition = decompose(measure, truncation, config.hypothesis_tolerance)
    write_model(args.out, decomposition_to_file(measure, decomposition, config.hypothesis_tolerance))

    if args.csv:
        pieces = (measure.inner, measure.outer, decomposition.lambda0, decomposition.eta0, decomposition.eta1, decomposition.lambda1)
        header = ["index"] + [f"{name}_{part}" for name in COEFFICIENT_CSV_PIECES for part in ("re", "im")]
        rows = []
        for j in range(-truncation, truncation + 1):
            row = [j]
            for piece in pieces:
                value = fourier_coefficient(piece, j)
                row += [value.real, value.imag]
            rows.append(row)
        write_csv(args.csv, header, rows)

    print(f"defect {format_number(decomposition.defect)}")
    return EXIT_OK


def cmd_map(args: Namespace) -> int:
    domain_spec = read_model(args.domain, DomainFile).domain
    outer = circle_from_spec(domain_spec.outer)
    holes = [circle_from_spec(hole) for hole in domain_spec.holes]
    if not holes:
        raise ProblemError("domain: a map needs at least one hole")

    rows = []
    for index, hole in enumerate(holes, start=1):
        chart = annulus_chart(outer, hole, 0, index)
        print(f"hole {index}: r0 = {format_number(chart.r0)}")
        for name in ("a", "b", "c", "d"):
            value = getattr(chart.map, name)
            print(f"  {name} = {format_number(value.real)} {format_number(value.imag)}")
        if args.csv:
            for circle_index, circle in ((0, outer), (index, hole)):
                sources = sample_boundary(circle, args.samples)
                for source, image in zip(sources, chart.forward(sources)):
                    rows.append([index, circle_index, source.real, source.imag, image.real, image.imag, abs(image)])

    if args.csv:
        write_csv(args.csv, CORRESPONDENCE_CSV_HEADER, rows)
    return EXIT_OK


def cmd_verify(args: Namespace) -> int:
    problem, result, options = result_from_file(read_model(args.result, ResultFile))
    options = solver_options_from_args(options, args)

    start = time.perf_counter()
    report = verify_extension(problem, result.F, result.kind, result.margins, result.terms, options)
    if args.timing:
        report = report.model_copy(update={"wall_time": time.perf_counter() - start})

    if args.report:
        write_model(args.report, report)
    if args.csv:
        write_csv(args.csv, BOUNDARY_CSV_HEADER, boundary_rows(problem, result.F, options.boundary_samples))

    if not report.passed:
        raise VerificationFailed("; ".join(report.failures))
    print(f"verified {result.kind} result: interpolation residual {format_number(report.interpolation_residual)}")
    return EXIT_OK


COMMANDS: Dict[str, Callable[[Namespace], int]] = {
    "solve": cmd_solve,
    "decompose": cmd_decompose,
    "map": cmd_map,
    "verify": cmd_verify,
}


# =============================================================================
# Entry point
# =============================================================================


def _randomness_fingerprint():
    state = np.random.get_state()
    return random.getstate(), state[1].tobytes(), state[2], state[3], state[4]


def main(argv=None) -> int:
    """Entry point for the CLI command."""
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT
    except ValueError as e:
        _diagnose(e)
        return EXIT_INPUT

    configure_logging(args)
    before = _randomness_fingerprint() if args.seedless else None

    try:
        code = COMMANDS[args.command](args)
        if before is not None and _randomness_fingerprint() != before:
            raise RandomnessUsed("A global random generator was used during the run")
    except INPUT_ERRORS as e:
        logger.error(f"Could not read input: {e}")
        _diagnose(e)
        return EXIT_INPUT
    except HoloExtendError as e:
        logger.error(f"{args.command} failed: {e}")
        _diagnose(e)
        return EXIT_FAILURE
    return code


if __name__ == "__main__":
    sys.exit(main())
