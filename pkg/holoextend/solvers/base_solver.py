import time
from typing import List, Optional, Sequence

import numpy as np

from ..config import SolverOptions, get_solver_options, get_verification_config
from ..errors import AnchorNotOnCircle, BoundViolatedAfterMaxRounds, InfeasibleBound, PointsTooClose
from ..holomorphic.expressions import HoloFunction, combine, evaluate
from ..logging_config import get_logger
from .solver_monitor import get_solver_monitor

logger = get_logger(__name__)


def project_onto_circle(points: Sequence[complex], radius: float, tolerance: float) -> np.ndarray:
    """Snap points within tolerance of |z| = radius onto that circle."""
    points = np.asarray(points, dtype=complex)
    if points.size == 0:
        return points
    moduli = np.abs(points)
    off = np.abs(moduli - radius)
    if np.any(off > tolerance * max(1.0, radius)):
        worst = points[np.argmax(off)]
        raise AnchorNotOnCircle(f"Constraint point {worst} is {np.max(off):.3e} away from |z| = {radius}")
    return points * (radius / moduli)


def same_circle_log_moduli(unit_points: np.ndarray) -> np.ndarray:
    """log |(1 + conj(zeta_j) zeta_i) / 2| for unit points, accurate for close pairs."""
    chord = np.abs(unit_points[:, None] - unit_points[None, :])
    with np.errstate(divide="ignore"):
        return 0.5 * np.log1p(-(chord**2) / 4)


def check_targets(points: np.ndarray, values: np.ndarray, bounds: np.ndarray, options: SolverOptions, label: str = "constraint") -> float:
    """Validate separation and |f| < safety * M; returns the smallest margin M - |f|."""
    if points.size > 1:
        gaps = np.abs(points[:, None] - points[None, :])
        np.fill_diagonal(gaps, np.inf)
        if np.min(gaps) <= options.min_separation:
            raise PointsTooClose(f"{label} points are {np.min(gaps):.3e} apart (minimum {options.min_separation:.1e})")

    moduli = np.abs(values)
    if np.any(moduli >= bounds):
        index = int(np.argmax(moduli - bounds))
        raise InfeasibleBound(f"{label} target |f| = {moduli[index]} is not below M = {bounds[index]} at {points[index]}")
    if np.any(moduli > options.safety * bounds):
        index = int(np.argmax(moduli / bounds))
        raise InfeasibleBound(f"{label} target |f| = {moduli[index]} exceeds safety {options.safety} * M = {options.safety * bounds[index]} at {points[index]}")
    return float(np.min(bounds - moduli)) if points.size else float("inf")


class BaseSolver:
    """Shared peak-basis solve: F = sum_i c_i p_i with P c = f and a sampled bound check.

    Subclasses supply the peaks, the closed-form moduli used to pick initial
    exponents, and the sampled bound ratio max |F| / M.
    """

    name = "base"

    def __init__(self, options: Optional[SolverOptions] = None):
        self.options = options or get_solver_options()
        self.logger = get_logger(self.__class__.__name__)
        self.monitor = get_solver_monitor()

    # ------------------------------------------------------------------
    # Hooks
    # ------------------------------------------------------------------

    def build_peak(self, index: int, exponent: int) -> HoloFunction:
        raise NotImplementedError

    def cross_log_moduli(self) -> np.ndarray:
        """m x m matrix of log |base of peak j at anchor i|; the diagonal is ignored."""
        raise NotImplementedError

    def leak_requirements(self) -> List[Optional[tuple]]:
        """Per peak, an optional (log base, target) pair with base^n <= target required."""
        return [None] * len(self.points)

    def bound_ratio(self, candidate: HoloFunction) -> float:
        raise NotImplementedError

    # ------------------------------------------------------------------
    # Solve loop
    # ------------------------------------------------------------------

    def initial_exponents(self) -> List[int]:
        m = len(self.points)
        target = self.options.cross_peak_budget / m
        log_moduli = self.cross_log_moduli()
        exponents = []
        for j in range(m):
            need = 1.0
            for i in range(m):
                if i == j:
                    continue
                log_b = log_moduli[i, j]
                if log_b >= 0:
                    raise PointsTooClose(f"Constraint points {self.points[i]} and {self.points[j]} cannot be separated")
                if np.isfinite(log_b):
                    need = max(need, np.log(target) / log_b)
            leak = self.leak_requirements()[j]
            if leak is not None:
                log_b, leak_target = leak
                need = max(need, np.log(leak_target) / log_b)
            if need > self.options.max_exponent:
                raise PointsTooClose(f"Separating constraint point {self.points[j]} needs exponent {need:.3e}")
            exponents.append(int(np.ceil(need)))
        return exponents

    def solve_system(self, points: np.ndarray, values: np.ndarray) -> HoloFunction:
        self.points = points
        self.values = values
        tolerance = get_verification_config().disc_interpolation_tol
        exponents = self.initial_exponents()
        start = time.perf_counter()

        for round_index in range(1, self.options.max_rounds + 1):
            basis = [self.build_peak(i, n) for i, n in enumerate(exponents)]
            matrix = np.column_stack([evaluate(peak, points) for peak in basis])
            try:
                coefficients = np.linalg.solve(matrix, values)
            except np.linalg.LinAlgError:
                coefficients = None

            if coefficients is not None:
                candidate = combine(coefficients, basis)
                residual = float(np.max(np.abs(evaluate(candidate, points) - values)))
                ratio = self.bound_ratio(candidate)
                if residual <= tolerance and ratio <= self.options.safety:
                    self.monitor.record_solve(self.name, round_index, max(exponents), time.perf_counter() - start)
                    self.logger.debug(f"{self.name}: {len(points)} peaks solved in {round_index} rounds, max exponent {max(exponents)}, ratio {ratio:.4f}")
                    return candidate
                self.logger.debug(f"{self.name} round {round_index}: residual {residual:.2e}, bound ratio {ratio:.4f}; doubling exponents")
            else:
                self.logger.debug(f"{self.name} round {round_index}: singular peak system; doubling exponents")

            if 2 * max(exponents) > self.options.max_exponent:
                break
            exponents = [2 * n for n in exponents]

        self.monitor.record_failure(self.name)
        raise BoundViolatedAfterMaxRounds(f"{self.name}: sampled bound not met after {round_index} rounds (max exponent {max(exponents)})")
