"""Peak-function solvers on discs and annuli, gluing and verification."""

from .annulus_solver import AnnulusConstraint, AnnulusSolver, extend_annulus, separating_function
from .base_solver import BaseSolver
from .bounds import BoundFunction, ChartBound, CircleBound, ConstantBound, as_profile
from .checks import constraint_discs, holomorphy_annuli, verify_extension
from .disc_solver import BoundaryConstraint, DiscSolver, extend_disc, extend_disc_nonconstant, extend_region
from .gluing import (
    choose_delta,
    choose_eps,
    choose_gamma,
    delta_from_sup,
    eps_from_sup,
    glue,
    interpolate_with_punctures,
    solve_problem,
)
from .problem import ComponentSampling, ExtensionProblem, sample_components
from .solver_monitor import SolverMonitor, get_solver_monitor

__all__ = [
    "AnnulusConstraint",
    "AnnulusSolver",
    "BaseSolver",
    "BoundFunction",
    "BoundaryConstraint",
    "ChartBound",
    "CircleBound",
    "ComponentSampling",
    "ConstantBound",
    "DiscSolver",
    "ExtensionProblem",
    "SolverMonitor",
    "as_profile",
    "choose_delta",
    "choose_eps",
    "choose_gamma",
    "constraint_discs",
    "delta_from_sup",
    "eps_from_sup",
    "extend_annulus",
    "extend_disc",
    "extend_disc_nonconstant",
    "extend_region",
    "get_solver_monitor",
    "glue",
    "holomorphy_annuli",
    "interpolate_with_punctures",
    "sample_components",
    "separating_function",
    "solve_problem",
    "verify_extension",
]
