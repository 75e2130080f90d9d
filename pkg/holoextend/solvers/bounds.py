"""Positive bound functions M on boundary circles.

A BoundFunction is a trigonometric polynomial in the angle about the circle's
center. Solvers work in chart coordinates, so they consume *profiles*: callables
giving the bound at points of the solver's circle.
"""

from dataclasses import dataclass
from typing import Protocol, Sequence, Tuple, Union

import numpy as np

from ..conformal.moebius import MoebiusMap
from ..errors import ProblemError
from ..geometry.domain import Circle, sample_angles

POSITIVITY_SAMPLES = 4096


@dataclass(frozen=True)
class BoundFunction:
    """M(theta) = constant + sum_k cos[k-1] cos(k theta) + sin[k-1] sin(k theta)."""

    constant: float
    cos: Tuple[float, ...] = ()
    sin: Tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constant", float(self.constant))
        object.__setattr__(self, "cos", tuple(float(v) for v in self.cos))
        object.__setattr__(self, "sin", tuple(float(v) for v in self.sin))
        minimum = self.min_value()
        if not (np.isfinite(minimum) and minimum > 0):
            raise ProblemError(f"Bound function must be positive on the circle, sampled minimum is {minimum}")

    @classmethod
    def const(cls, value: float) -> "BoundFunction":
        return cls(value)

    @property
    def is_constant(self) -> bool:
        return not any(self.cos) and not any(self.sin)

    def at_angle(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        value = np.full(theta.shape, self.constant)
        for k, a in enumerate(self.cos, start=1):
            value = value + a * np.cos(k * theta)
        for k, b in enumerate(self.sin, start=1):
            value = value + b * np.sin(k * theta)
        return value

    def min_value(self, n_samples: int = POSITIVITY_SAMPLES) -> float:
        return float(np.min(self.at_angle(sample_angles(n_samples))))

    def shifted(self, delta: float) -> "BoundFunction":
        """M + delta (delta is usually negative)."""
        return BoundFunction(self.constant + delta, self.cos, self.sin)


class BoundProfile(Protocol):
    def values(self, z: np.ndarray) -> np.ndarray: ...


@dataclass(frozen=True)
class ConstantBound:
    value: float

    def values(self, z: np.ndarray) -> np.ndarray:
        return np.full(np.shape(z), float(self.value))


@dataclass(frozen=True)
class CircleBound:
    """A BoundFunction read at points of a given circle."""

    bound: BoundFunction
    circle: Circle

    def values(self, z: np.ndarray) -> np.ndarray:
        return self.bound.at_angle(self.circle.angles_of(z))


@dataclass(frozen=True)
class ChartBound:
    """A source profile pulled back to chart coordinates through the chart's inverse."""

    source: BoundProfile
    inverse: MoebiusMap

    def values(self, w: np.ndarray) -> np.ndarray:
        return self.source.values(np.asarray(self.inverse.forward(np.asarray(w, dtype=complex))))


BoundLike = Union[BoundFunction, BoundProfile, float]


def as_profile(bound: BoundLike, circle: Circle) -> BoundProfile:
    """Interpret a bound given for points of circle."""
    if isinstance(bound, BoundFunction):
        if bound.is_constant:
            return ConstantBound(bound.constant)
        return CircleBound(bound, circle)
    if isinstance(bound, (int, float)):
        return ConstantBound(float(bound))
    return bound


def profile_values(profile: BoundProfile, points: Sequence[complex]) -> np.ndarray:
    return np.asarray(profile.values(np.asarray(points, dtype=complex)), dtype=float)
