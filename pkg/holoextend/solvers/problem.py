"""Extension problems on circle domains and their boundary sampling."""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..config import get_geometry_config, get_solver_options
from ..errors import ProblemError
from ..geometry.domain import Domain, sample_angles, sample_boundary
from ..holomorphic.expressions import HoloFunction, evaluate
from .bounds import BoundFunction
from .disc_solver import BoundaryConstraint


@dataclass(frozen=True)
class ExtensionProblem:
    """Boundary data on a circle domain: one constraint per boundary component.

    Constraint points lie on their own component circle and each bound is a
    BoundFunction in the angle about that circle's center.
    """

    domain: Domain
    constraints: Tuple[BoundaryConstraint, ...]
    puncture_values: Tuple[complex, ...] = ()

    def __post_init__(self):
        constraints = tuple(self.constraints)
        if len(constraints) != self.domain.k:
            raise ProblemError(f"Expected {self.domain.k} component constraints, got {len(constraints)}")

        tolerance = get_geometry_config().on_circle_tolerance
        normalized = []
        for j, constraint in enumerate(constraints):
            bound = constraint.bound
            if isinstance(bound, (int, float)):
                bound = BoundFunction.const(bound)
            if not isinstance(bound, BoundFunction):
                raise ProblemError(f"Component {j} bound must be a BoundFunction, got {type(bound).__name__}")
            circle = self.domain.component(j)
            if constraint.points:
                off = np.max(np.abs(circle.distance_from(constraint.points)))
                if off > tolerance * max(1.0, circle.radius):
                    raise ProblemError(f"Constraint points of component {j} are {off:.3e} away from its circle")
            normalized.append(BoundaryConstraint(constraint.points, constraint.values, bound))
        object.__setattr__(self, "constraints", tuple(normalized))

        values = tuple(complex(w) for w in self.puncture_values)
        if len(values) != self.domain.n_punctures:
            raise ProblemError(f"Expected {self.domain.n_punctures} puncture values, got {len(values)}")
        object.__setattr__(self, "puncture_values", values)

    @property
    def k(self) -> int:
        return self.domain.k

    def bound(self, j: int) -> BoundFunction:
        return self.constraints[j].bound

    def targets(self, j: int) -> Tuple[np.ndarray, np.ndarray]:
        constraint = self.constraints[j]
        return np.asarray(constraint.points, dtype=complex), np.asarray(constraint.values, dtype=complex)

    def bound_at(self, j: int, points: np.ndarray) -> np.ndarray:
        return self.bound(j).at_angle(self.domain.component(j).angles_of(points))

    def without_punctures(self) -> "ExtensionProblem":
        return ExtensionProblem(self.domain.without_punctures(), self.constraints)


@dataclass(frozen=True, eq=False)
class ComponentSampling:
    """Equally spaced samples of every boundary component and M there."""

    points: Tuple[np.ndarray, ...]
    bounds: Tuple[np.ndarray, ...]

    @property
    def k(self) -> int:
        return len(self.points)

    @property
    def count(self) -> int:
        return sum(p.size for p in self.points)


def sample_components(p: ExtensionProblem, n_samples: Optional[int] = None) -> ComponentSampling:
    n_samples = n_samples or get_solver_options().boundary_samples
    angles = sample_angles(n_samples)
    points = tuple(sample_boundary(circle, n_samples) for circle in p.domain.components)
    bounds = tuple(p.bound(j).at_angle(angles) for j in range(p.k))
    return ComponentSampling(points, bounds)


def extension_moduli(extensions: Sequence[HoloFunction], sampling: ComponentSampling) -> np.ndarray:
    """moduli[l, j] = |F_l| at the samples of component j."""
    return np.array([[np.abs(evaluate(F, points)) for points in sampling.points] for F in extensions])

