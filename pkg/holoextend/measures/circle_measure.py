"""Complex measures on centered circles.

A measure on aT is a finite set of atoms plus a trigonometric-polynomial density
against the normalized arclength measure sigma. With this representation every
Fourier coefficient mu_j = integral of z^-j dmu is exact:

    mu_j = a^-j * (sum_atoms w e^{-i j theta} + d_j)
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Tuple

import numpy as np

from ..errors import InvalidMeasure
from ..geometry.domain import Circle
from ..holomorphic.verification import FourierSeq

# Relative size of rounding allowed before a bound margin counts as negative
_MARGIN_ROUNDING = 64 * np.finfo(float).eps


def _canonical_atoms(atoms: Iterable[Tuple[float, complex]]) -> Tuple[Tuple[float, complex], ...]:
    normalized = sorted(((float(np.mod(angle, 2 * np.pi)), complex(weight)) for angle, weight in atoms), key=lambda atom: atom[0])
    angles = [angle for angle, _ in normalized]
    if len(set(angles)) != len(angles):
        raise InvalidMeasure(f"Atom angles must be pairwise distinct, got {angles}")
    return tuple((angle, weight) for angle, weight in normalized if weight != 0)


def _canonical_density(density: Mapping[int, complex]) -> Tuple[Tuple[int, complex], ...]:
    return tuple((int(k), complex(v)) for k, v in sorted(density.items()) if v != 0)


@dataclass(frozen=True)
class CircleMeasure:
    circle: Circle
    atoms: Tuple[Tuple[float, complex], ...] = ()
    density: Tuple[Tuple[int, complex], ...] = ()

    def __post_init__(self):
        if self.circle.center != 0:
            raise InvalidMeasure(f"Measures live on circles centered at 0, got center {self.circle.center}")
        object.__setattr__(self, "atoms", _canonical_atoms(self.atoms))
        density = self.density if isinstance(self.density, Mapping) else dict(self.density)
        object.__setattr__(self, "density", _canonical_density(density))

    @classmethod
    def on_radius(cls, radius: float, atoms: Iterable[Tuple[float, complex]] = (), density: Mapping[int, complex] = None) -> "CircleMeasure":
        return cls(Circle(0j, radius), tuple(atoms), tuple((density or {}).items()))

    @classmethod
    def zero(cls, radius: float) -> "CircleMeasure":
        return cls.on_radius(radius)

    @property
    def radius(self) -> float:
        return self.circle.radius

    @property
    def density_dict(self) -> Dict[int, complex]:
        return dict(self.density)

    @property
    def atom_angles(self) -> np.ndarray:
        return np.array([angle for angle, _ in self.atoms], dtype=float)

    @property
    def atom_weights(self) -> np.ndarray:
        return np.array([weight for _, weight in self.atoms], dtype=complex)

    @property
    def density_support(self) -> Tuple[int, ...]:
        return tuple(k for k, _ in self.density)

    @property
    def tv_ub(self) -> float:
        """Upper bound of the total variation |mu|(aT)."""
        return float(np.sum(np.abs(self.atom_weights)) + sum(abs(v) for _, v in self.density))

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(abs(w) <= tol for _, w in self.atoms) and all(abs(v) <= tol for _, v in self.density)

    def _check_compatible(self, other: "CircleMeasure") -> None:
        if self.radius != other.radius:
            raise InvalidMeasure(f"Cannot combine measures on radii {self.radius} and {other.radius}")

    def __add__(self, other: "CircleMeasure") -> "CircleMeasure":
        self._check_compatible(other)
        atoms: Dict[float, complex] = dict(self.atoms)
        for angle, weight in other.atoms:
            atoms[angle] = atoms.get(angle, 0j) + weight
        density = self.density_dict
        for k, v in other.density:
            density[k] = density.get(k, 0j) + v
        return CircleMeasure(self.circle, tuple(atoms.items()), tuple(density.items()))

    def scaled(self, factor: complex) -> "CircleMeasure":
        return CircleMeasure(
            self.circle,
            tuple((angle, factor * weight) for angle, weight in self.atoms),
            tuple((k, factor * v) for k, v in self.density),
        )

    def __neg__(self) -> "CircleMeasure":
        return self.scaled(-1)

    def __sub__(self, other: "CircleMeasure") -> "CircleMeasure":
        return self + (-other)


@dataclass(frozen=True)
class AnnulusMeasure:
    """A measure on the boundary T u r0 T of the annulus r0 < |z| < 1."""

    inner: CircleMeasure
    outer: CircleMeasure
    r0: float

    def __post_init__(self):
        if not (0 < self.r0 < 1):
            raise InvalidMeasure(f"Inner radius must lie in (0, 1), got {self.r0}")
        if self.inner.radius != self.r0:
            raise InvalidMeasure(f"Inner measure lives on radius {self.inner.radius}, expected {self.r0}")
        if self.outer.radius != 1.0:
            raise InvalidMeasure(f"Outer measure lives on radius {self.outer.radius}, expected 1")


# =============================================================================
# Fourier analysis
# =============================================================================


def _unscaled_coefficient(m: CircleMeasure, j: int) -> complex:
    """sum_atoms w e^{-i j theta} + d_j, i.e. a^j * mu_j."""
    atom_part = np.sum(m.atom_weights * np.exp(-1j * j * m.atom_angles)) if m.atoms else 0j
    return complex(atom_part) + m.density_dict.get(j, 0j)


def fourier_coefficient(m: CircleMeasure, j: int) -> complex:
    """Exact mu_j = integral over aT of z^-j dmu."""
    return m.radius ** (-j) * _unscaled_coefficient(m, j)


def coefficient_bound_margin(m: CircleMeasure, j: int) -> float:
    """a^-j |mu|(aT) - |mu_j|, never negative beyond rounding."""
    tv = m.tv_ub
    inner = tv - abs(_unscaled_coefficient(m, j))
    if inner < 0 and -inner <= _MARGIN_ROUNDING * (len(m.atoms) + len(m.density) + 1) * tv:
        inner = 0.0
    return m.radius ** (-j) * inner


def fourier_sequence(m: CircleMeasure, J: int) -> FourierSeq:
    """The truncated coefficient sequence (mu_j) for |j| <= J."""
    return FourierSeq(J, {j: fourier_coefficient(m, j) for j in range(-J, J + 1)})


def measure_from_sequence(seq: FourierSeq, radius: float) -> CircleMeasure:
    """Density-only measure on radius whose coefficients are seq."""
    density = {j: radius**j * a for j, a in seq.coefficients.items()}
    return CircleMeasure.on_radius(radius, density=density)


def arc_variation_probe(m: CircleMeasure, center_angle: float, half_width: float) -> complex:
    """mu of the closed arc of angles within half_width of center_angle."""
    if not (0 < half_width < np.pi):
        raise ValueError(f"Half width must lie in (0, pi), got {half_width}")

    total = 0j
    if m.atoms:
        offset = np.abs(np.mod(m.atom_angles - center_angle + np.pi, 2 * np.pi) - np.pi)
        total += complex(np.sum(m.atom_weights[offset <= half_width]))

    for k, v in m.density:
        if k == 0:
            total += v * half_width / np.pi
        else:
            total += v * np.exp(1j * k * center_angle) * np.sin(k * half_width) / (np.pi * k)
    return complex(total)
