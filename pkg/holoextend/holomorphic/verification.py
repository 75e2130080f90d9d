from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from ..config import get_verification_config
from ..errors import RegionViolation
from ..geometry.domain import Circle, sample_boundary
from .expressions import HoloFunction, evaluate


@dataclass(frozen=True)
class FourierSeq:
    """Coefficients indexed by j in [-J, J]; missing indices are zero."""

    J: int
    coefficients: Dict[int, complex] = field(default_factory=dict)

    def __post_init__(self):
        if self.J < 0:
            raise ValueError(f"Truncation order must be non-negative, got {self.J}")
        outside = [j for j in self.coefficients if abs(j) > self.J]
        if outside:
            raise ValueError(f"Indices {sorted(outside)} lie outside [-{self.J}, {self.J}]")
        object.__setattr__(self, "coefficients", {int(j): complex(a) for j, a in sorted(self.coefficients.items())})

    def __getitem__(self, j: int) -> complex:
        return self.coefficients.get(j, 0j)

    @property
    def indices(self) -> range:
        return range(-self.J, self.J + 1)

    def as_array(self) -> np.ndarray:
        """Values for j = -J..J in order."""
        return np.array([self[j] for j in self.indices], dtype=complex)

    def support(self, tol: float = 0.0) -> list:
        return [j for j, a in self.coefficients.items() if abs(a) > tol]

    def max_abs_difference(self, other: "FourierSeq") -> float:
        order = max(self.J, other.J)
        return max((abs(self[j] - other[j]) for j in range(-order, order + 1)), default=0.0)


def _check_fft_length(J: int, n_samples: int) -> None:
    if n_samples < 4 * J or n_samples & (n_samples - 1) != 0:
        raise ValueError(f"Sample count must be a power of two of at least 4J = {4 * J}, got {n_samples}")


def default_sample_count(J: int) -> int:
    n = 8
    while n < 4 * J:
        n *= 2
    return n


def laurent_coeffs(f: HoloFunction, c: Circle, J: int, n_samples: Optional[int] = None) -> FourierSeq:
    """Laurent coefficients about c.center from equally spaced samples on c."""
    if J < 1:
        raise ValueError(f"Truncation order must be positive, got {J}")
    n_samples = default_sample_count(J) if n_samples is None else n_samples
    _check_fft_length(J, n_samples)

    values = evaluate(f, sample_boundary(c, n_samples))
    spectrum = np.fft.fft(values) / n_samples
    coefficients = {j: complex(spectrum[j % n_samples] * c.radius ** (-j)) for j in range(-J, J + 1)}
    return FourierSeq(J, coefficients)


def sup_on_circle(f: HoloFunction, c: Circle, n_samples: int = 4096) -> float:
    """Sampled maximum of |f| on c; a lower bound of the true supremum."""
    return float(np.max(np.abs(evaluate(f, sample_boundary(c, n_samples)))))


def holomorphy_residual(f: HoloFunction, center: complex, rho1: float, rho2: float, J: int, n_samples: Optional[int] = None) -> float:
    """Disagreement of the Laurent coefficients read off two concentric circles.

    The difference at index j is weighted by min(1, rho1^j, rho2^j), which
    removes the rounding amplified by rescaling with rho^-j while leaving
    genuine discrepancies of size O(1) intact.
    """
    if not (0 < rho1 < rho2):
        raise RegionViolation(f"Radii must satisfy 0 < rho1 < rho2, got {rho1}, {rho2}")
    region = f.region
    if region is not None and not region.contains_annulus(center, rho1, rho2):
        raise RegionViolation(f"Annulus {rho1} <= |z - {center}| <= {rho2} leaves the region of definition")

    if n_samples is None:
        n_samples = max(get_verification_config().holomorphy_samples, default_sample_count(J))
    inner = laurent_coeffs(f, Circle(center, rho1), J, n_samples)
    outer = laurent_coeffs(f, Circle(center, rho2), J, n_samples)

    residual = 0.0
    for j in range(-J, J + 1):
        weight = min(1.0, rho1**j, rho2**j)
        residual = max(residual, abs(inner[j] - outer[j]) * weight)
    return residual
