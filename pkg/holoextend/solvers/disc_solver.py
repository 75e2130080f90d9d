"""Rudin-Carleson interpolation on the unit disc by peak functions.

For finite E on the unit circle the solution is F = sum_i c_i p_i with
p_i(z) = ((1 + conj(zeta_i) z) / 2)^n_i. The exponents make the peak system
diagonally dominant; they are doubled until the sampled bound |F| <= safety * M
holds. One-circle regions are solved in the chart z -> w of ``disc_chart``.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..config import SolverOptions, get_geometry_config, get_solver_options
from ..conformal.moebius import MoebiusMap, disc_chart, unit_disc_region
from ..errors import ProblemError
from ..geometry.domain import UNIT_CIRCLE, RegionDescriptor, sample_boundary
from ..holomorphic.expressions import Compose, Const, DiscPeak, HoloFunction, OnRegion, evaluate
from ..logging_config import get_logger
from .base_solver import BaseSolver, check_targets, project_onto_circle, same_circle_log_moduli
from .bounds import BoundLike, BoundProfile, ChartBound, as_profile, profile_values

logger = get_logger(__name__)


@dataclass(frozen=True)
class BoundaryConstraint:
    """Targets ``values`` at ``points`` of one circle, with bound M."""

    points: Tuple[complex, ...] = ()
    values: Tuple[complex, ...] = ()
    bound: BoundLike = 1.0

    def __post_init__(self):
        points = tuple(complex(z) for z in self.points)
        values = tuple(complex(v) for v in self.values)
        if len(points) != len(values):
            raise ProblemError(f"Constraint has {len(points)} points but {len(values)} values")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "values", values)

    @property
    def is_empty(self) -> bool:
        return not self.points

    def check(self, options: Optional[SolverOptions] = None) -> float:
        """Validate against the unit circle; returns the smallest margin M - |f|."""
        options = options or get_solver_options()
        points = project_onto_circle(self.points, 1.0, get_geometry_config().on_circle_tolerance)
        profile = as_profile(self.bound, UNIT_CIRCLE)
        return check_targets(points, np.asarray(self.values, dtype=complex), profile_values(profile, points), options)


class DiscSolver(BaseSolver):
    name = "disc"

    def __init__(self, bound: BoundProfile, options: Optional[SolverOptions] = None):
        super().__init__(options)
        self.samples = sample_boundary(UNIT_CIRCLE, self.options.boundary_samples)
        self.sample_bounds = profile_values(bound, self.samples)

    def build_peak(self, index: int, exponent: int) -> HoloFunction:
        return DiscPeak(self.points[index], UNIT_CIRCLE, exponent)

    def cross_log_moduli(self) -> np.ndarray:
        return same_circle_log_moduli(self.points)

    def bound_ratio(self, candidate: HoloFunction) -> float:
        return float(np.max(np.abs(evaluate(candidate, self.samples)) / self.sample_bounds))


# =============================================================================
# Unit disc
# =============================================================================


def _solve_unit_circle(points: Sequence[complex], values: Sequence[complex], profile: BoundProfile, options: SolverOptions) -> HoloFunction:
    """Unwrapped solution on the unit disc; Const(0) when there is nothing to fit."""
    points = project_onto_circle(points, 1.0, get_geometry_config().on_circle_tolerance)
    values = np.asarray(values, dtype=complex)
    if points.size == 0:
        return Const(0)
    check_targets(points, values, profile_values(profile, points), options)
    if not np.any(values):
        return Const(0)
    return DiscSolver(profile, options).solve_system(points, values)


def augmentation_angle(angles: Sequence[float], attempt: int = 0) -> float:
    """A free angle in the largest gap between the given angles.

    Attempt t places the point at fraction (t + 1) / (t + 2) of the gap, so the
    first attempt is the midpoint and later attempts move along the gap.
    """
    fraction = (attempt + 1) / (attempt + 2)
    if len(angles) == 0:
        return 2 * np.pi * fraction
    ordered = np.sort(np.mod(np.asarray(angles, dtype=float), 2 * np.pi))
    gaps = np.diff(np.append(ordered, ordered[0] + 2 * np.pi))
    widest = int(np.argmax(gaps))
    return float(np.mod(ordered[widest] + fraction * gaps[widest], 2 * np.pi))


def _augment(points: np.ndarray, values: np.ndarray, profile: BoundProfile, attempt: int) -> Tuple[np.ndarray, np.ndarray]:
    """Add one point whose target differs from the common value of ``values``."""
    p = complex(np.exp(1j * augmentation_angle(np.angle(points), attempt)))
    bound = float(profile_values(profile, [p])[0])
    if values.size == 0:
        w = 0.5j * bound
    elif values[0] == 0:
        w = 0.5 * bound
    else:
        w = 0j
    logger.debug(f"Augmenting constraint with p = {p:.6f}, w = {w}")
    return np.append(points, p), np.append(values, w)


def _solve_unit_circle_nonconstant(points, values, profile: BoundProfile, options: SolverOptions, attempt: int = 0) -> HoloFunction:
    points = project_onto_circle(points, 1.0, get_geometry_config().on_circle_tolerance)
    values = np.asarray(values, dtype=complex)
    if np.unique(values).size < 2:
        points, values = _augment(points, values, profile, attempt)
    return _solve_unit_circle(points, values, profile, options)


def extend_disc(c: BoundaryConstraint, opts: Optional[SolverOptions] = None) -> HoloFunction:
    """F holomorphic on the disc with F = f on E and sampled |F| <= safety * M."""
    opts = opts or get_solver_options()
    raw = _solve_unit_circle(c.points, c.values, as_profile(c.bound, UNIT_CIRCLE), opts)
    if isinstance(raw, Const):
        return raw
    return OnRegion(raw, unit_disc_region())


def extend_disc_nonconstant(c: BoundaryConstraint, opts: Optional[SolverOptions] = None, attempt: int = 0) -> HoloFunction:
    """As extend_disc, with E augmented by one point when all targets agree."""
    opts = opts or get_solver_options()
    raw = _solve_unit_circle_nonconstant(c.points, c.values, as_profile(c.bound, UNIT_CIRCLE), opts, attempt)
    return OnRegion(raw, unit_disc_region())


# =============================================================================
# One-circle regions
# =============================================================================


def extend_region(
    region: RegionDescriptor,
    constraint: BoundaryConstraint,
    opts: Optional[SolverOptions] = None,
    nonconstant: bool = False,
    attempt: int = 0,
) -> HoloFunction:
    """Solve on a disc interior or circle exterior through its disc chart.

    The constraint is stated on the region's boundary circle; the bound is read
    there and pulled back to the unit circle through the inverse chart.
    """
    opts = opts or get_solver_options()
    chart = disc_chart(region)
    (source, _), = region.boundaries

    if constraint.is_empty and not nonconstant:
        return Const(0)

    transported = np.atleast_1d(chart.forward(np.asarray(constraint.points, dtype=complex)))
    profile = ChartBound(as_profile(constraint.bound, source), chart.inverse_map())
    if nonconstant:
        raw = _solve_unit_circle_nonconstant(transported, constraint.values, profile, opts, attempt)
    else:
        raw = _solve_unit_circle(transported, constraint.values, profile, opts)

    if isinstance(raw, Const):
        return raw
    if chart == MoebiusMap.identity():
        return OnRegion(raw, region)
    return OnRegion(Compose(raw, chart.as_holo()), region)
