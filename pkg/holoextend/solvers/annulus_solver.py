"""Interpolation on the standard annulus r0 < |z| < 1 and separating functions.

Outer constraint points use disc peaks ((1 + conj(zeta) z) / 2)^n; inner points
use the same peak in the inverted variable r0 / z. An outer peak has modulus at
most ((1 + r0) / 2)^n on |z| = r0 and an inner peak the same on |z| = 1, so both
families decay across the annulus and the exponents can be chosen from closed
forms before the sampled bound check.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..config import SolverOptions, get_geometry_config, get_solver_options
from ..conformal.moebius import solver_annulus_region
from ..errors import ProblemError, SeparationCheckFailed
from ..geometry.domain import UNIT_CIRCLE, Circle, sample_boundary
from ..holomorphic.expressions import Const, DiscPeak, HoloFunction, OnRegion, evaluate
from ..holomorphic.peaks import annulus_inner_peak
from ..logging_config import get_logger
from .base_solver import BaseSolver, check_targets, project_onto_circle, same_circle_log_moduli
from .bounds import BoundLike, BoundProfile, as_profile, profile_values

logger = get_logger(__name__)

# Interior circles checked for the separating-function bound, as fractions of (r0, 1)
INTERIOR_FRACTIONS = (0.25, 0.5, 0.75)


@dataclass(frozen=True)
class AnnulusConstraint:
    r0: float
    outer_points: Tuple[complex, ...] = ()
    outer_values: Tuple[complex, ...] = ()
    inner_points: Tuple[complex, ...] = ()
    inner_values: Tuple[complex, ...] = ()
    outer_bound: BoundLike = 1.0
    inner_bound: BoundLike = 1.0

    def __post_init__(self):
        if not (0 < self.r0 < 1):
            raise ProblemError(f"Annulus inner radius must lie in (0, 1), got {self.r0}")
        for name in ("outer_points", "outer_values", "inner_points", "inner_values"):
            object.__setattr__(self, name, tuple(complex(z) for z in getattr(self, name)))
        if len(self.outer_points) != len(self.outer_values) or len(self.inner_points) != len(self.inner_values):
            raise ProblemError("Annulus constraint points and values differ in length")
        object.__setattr__(self, "r0", float(self.r0))

    @property
    def inner_circle(self) -> Circle:
        return Circle(0j, self.r0)


class AnnulusSolver(BaseSolver):
    name = "annulus"

    def __init__(self, r0: float, n_outer: int, outer_bound: BoundProfile, inner_bound: BoundProfile, options: Optional[SolverOptions] = None):
        super().__init__(options)
        self.r0 = r0
        self.n_outer = n_outer
        n = self.options.boundary_samples
        self.samples = np.concatenate([sample_boundary(UNIT_CIRCLE, n), sample_boundary(Circle(0j, r0), n)])
        self.sample_bounds = np.concatenate(
            [profile_values(outer_bound, self.samples[:n]), profile_values(inner_bound, self.samples[n:])]
        )
        self.min_bounds = (float(np.min(self.sample_bounds[:n])), float(np.min(self.sample_bounds[n:])))

    def is_outer(self, index: int) -> bool:
        return index < self.n_outer

    def build_peak(self, index: int, exponent: int) -> HoloFunction:
        if self.is_outer(index):
            return DiscPeak(self.points[index], UNIT_CIRCLE, exponent)
        return annulus_inner_peak(self.points[index], self.r0, exponent)

    def _unit_anchors(self) -> np.ndarray:
        """Anchors in the variable each peak is built in: z for outer, r0 / z for inner."""
        anchors = self.points.copy()
        anchors[self.n_outer :] = np.conj(anchors[self.n_outer :]) / self.r0
        return anchors

    def cross_log_moduli(self) -> np.ndarray:
        m = len(self.points)
        k = self.n_outer
        anchors = self._unit_anchors()
        result = np.empty((m, m))
        # inner peaks compare conj-ed anchors; chord lengths are unchanged
        result[:k, :k] = same_circle_log_moduli(anchors[:k])
        result[k:, k:] = same_circle_log_moduli(anchors[k:])
        with np.errstate(divide="ignore"):
            # outer peak j at inner point i
            outer_at_inner = np.abs(1 + np.conj(anchors[None, :k]) * self.points[k:, None]) / 2
            result[k:, :k] = np.log(outer_at_inner)
            # inner peak j at outer point i, variable r0 / z
            inner_at_outer = np.abs(1 + np.conj(anchors[None, k:]) * (self.r0 / self.points[:k, None])) / 2
            result[:k, k:] = np.log(inner_at_outer)
        return result

    def leak_requirements(self):
        """Cross-circle decay ((1 + r0) / 2)^n below the other circle's bound share."""
        m = len(self.points)
        peak = float(np.max(np.abs(self.values)))
        log_leak = np.log((1 + self.r0) / 2)
        requirements = []
        for index in range(m):
            other_min = self.min_bounds[1] if self.is_outer(index) else self.min_bounds[0]
            target = min(self.options.cross_peak_budget / m, self.options.safety * other_min / (2 * m * peak))
            requirements.append((log_leak, target))
        return requirements

    def bound_ratio(self, candidate: HoloFunction) -> float:
        return float(np.max(np.abs(evaluate(candidate, self.samples)) / self.sample_bounds))


def extend_annulus(c: AnnulusConstraint, opts: Optional[SolverOptions] = None) -> HoloFunction:
    """F holomorphic near the closed annulus with F = f on E and sampled |F| <= safety * M on both circles."""
    opts = opts or get_solver_options()
    tolerance = get_geometry_config().on_circle_tolerance
    inner_circle = c.inner_circle
    outer_points = project_onto_circle(c.outer_points, 1.0, tolerance)
    inner_points = project_onto_circle(c.inner_points, c.r0, tolerance)
    outer_values = np.asarray(c.outer_values, dtype=complex)
    inner_values = np.asarray(c.inner_values, dtype=complex)
    outer_profile = as_profile(c.outer_bound, UNIT_CIRCLE)
    inner_profile = as_profile(c.inner_bound, inner_circle)

    if outer_points.size:
        check_targets(outer_points, outer_values, profile_values(outer_profile, outer_points), opts, "outer")
    if inner_points.size:
        check_targets(inner_points, inner_values, profile_values(inner_profile, inner_points), opts, "inner")

    values = np.concatenate([outer_values, inner_values])
    if not np.any(values):
        return Const(0)

    solver = AnnulusSolver(c.r0, outer_points.size, outer_profile, inner_profile, opts)
    F = solver.solve_system(np.concatenate([outer_points, inner_points]), values)
    return OnRegion(F, solver_annulus_region(c.r0))


# =============================================================================
# Separating functions
# =============================================================================


def _sup_excess(h: HoloFunction, points: np.ndarray, limit: float) -> float:
    return float(np.max(np.abs(evaluate(h, points)))) - limit if points.size else -limit


def separating_function(
    r0: float,
    keep: Sequence[complex],
    kill: Sequence[complex],
    eps: float,
    delta: float,
    opts: Optional[SolverOptions] = None,
    keep_on_outer: bool = True,
) -> HoloFunction:
    """h with h = 1 on keep, h = 0 on kill, |h| < 1 + eps on the keep circle,
    |h| < min(delta, 1 + eps) on the kill circle and |h| < 1 + eps inside.

    ``keep_on_outer`` says which circle carries the keep points; kill points lie
    on the other one.
    """
    if eps <= 0 or delta <= 0:
        raise ProblemError(f"Separating margins must be positive, got eps = {eps}, delta = {delta}")
    keep = tuple(complex(z) for z in keep)
    kill = tuple(complex(z) for z in kill)
    if not keep and not kill:
        return Const(1)

    opts = opts or get_solver_options()
    keep_bound = (1 + eps / 2) / opts.safety
    kill_bound = min(delta, 1 + eps)
    ones = (1.0,) * len(keep)
    zeros = (0.0,) * len(kill)
    if keep_on_outer:
        constraint = AnnulusConstraint(r0, keep, ones, kill, zeros, keep_bound, kill_bound)
    else:
        constraint = AnnulusConstraint(r0, kill, zeros, keep, ones, kill_bound, keep_bound)
    h = extend_annulus(constraint, opts)

    n = opts.boundary_samples
    tolerance = get_geometry_config().on_circle_tolerance
    outer_samples = sample_boundary(UNIT_CIRCLE, n)
    inner_samples = sample_boundary(Circle(0j, r0), n)
    keep_samples, kill_samples = (outer_samples, inner_samples) if keep_on_outer else (inner_samples, outer_samples)
    keep_points = project_onto_circle(keep, 1.0 if keep_on_outer else r0, tolerance)
    kill_points = project_onto_circle(kill, r0 if keep_on_outer else 1.0, tolerance)

    failures = []
    if keep_points.size and np.max(np.abs(evaluate(h, keep_points) - 1)) > 1e-10:
        failures.append("h = 1 on keep points")
    if kill_points.size and np.max(np.abs(evaluate(h, kill_points))) > 1e-10:
        failures.append("h = 0 on kill points")
    if _sup_excess(h, keep_samples, 1 + eps) >= 0:
        failures.append("|h| < 1 + eps on the keep circle")
    if _sup_excess(h, kill_samples, kill_bound) >= 0:
        failures.append("|h| < min(delta, 1 + eps) on the kill circle")
    for fraction in INTERIOR_FRACTIONS:
        radius = r0 + fraction * (1 - r0)
        if _sup_excess(h, sample_boundary(Circle(0j, radius), n), 1 + eps) >= 0:
            failures.append(f"|h| < 1 + eps on |z| = {radius:.4f}")
    if failures:
        raise SeparationCheckFailed(f"Separating function (r0 = {r0}) failed: {'; '.join(failures)}")

    logger.debug(f"Separating function on r0 = {r0}: {len(keep)} keep, {len(kill)} kill points verified")
    return h
