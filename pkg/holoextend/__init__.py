from .config import SolverOptions, get_config, get_solver_options, reset_config, update_config
from .errors import HoloExtendError
from .geometry import Circle, Domain, build_domain
from .holomorphic import HoloFunction, evaluate
from .measures import AnnulusMeasure, CircleMeasure, decompose
from .results import ExtensionResult, GlueMargins, VerificationReport
from .solvers import (
    BoundaryConstraint,
    BoundFunction,
    ExtensionProblem,
    extend_annulus,
    extend_disc,
    glue,
    interpolate_with_punctures,
    separating_function,
    solve_problem,
    verify_extension,
)

__all__ = [
    "AnnulusMeasure",
    "BoundFunction",
    "BoundaryConstraint",
    "Circle",
    "CircleMeasure",
    "Domain",
    "ExtensionProblem",
    "ExtensionResult",
    "GlueMargins",
    "HoloExtendError",
    "HoloFunction",
    "SolverOptions",
    "VerificationReport",
    "build_domain",
    "decompose",
    "evaluate",
    "extend_annulus",
    "extend_disc",
    "get_config",
    "get_solver_options",
    "glue",
    "interpolate_with_punctures",
    "reset_config",
    "separating_function",
    "solve_problem",
    "update_config",
]
