from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from ..config import get_geometry_config
from ..errors import (
    DuplicatePuncture,
    InvalidCircle,
    InvalidRegionRef,
    NestedHoleViolation,
    OverlappingHoles,
    PunctureOutsideDomain,
)
from ..logging_config import get_logger

logger = get_logger(__name__)


# =============================================================================
# Circles and domains
# =============================================================================


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self):
        center = complex(self.center)
        radius = float(self.radius)
        if not (np.isfinite(center.real) and np.isfinite(center.imag)):
            raise InvalidCircle(f"Circle center must be finite, got {self.center}")
        if not (np.isfinite(radius) and radius > 0):
            raise InvalidCircle(f"Circle radius must be positive, got {self.radius}")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "radius", radius)

    def point(self, angle: float) -> complex:
        return self.center + self.radius * complex(np.exp(1j * angle))

    def angles_of(self, z) -> np.ndarray:
        """Angles of points about the center, in [0, 2*pi)."""
        return np.mod(np.angle(np.asarray(z, dtype=complex) - self.center), 2 * np.pi)

    def distance_from(self, z) -> np.ndarray:
        """Signed distance |z - center| - radius."""
        return np.abs(np.asarray(z, dtype=complex) - self.center) - self.radius

    def contains_disc_of(self, other: "Circle", gap: float = 0.0) -> bool:
        """True if other's closed disc lies in this open disc with the given gap."""
        return abs(other.center - self.center) + other.radius <= self.radius - gap

    def disjoint_from(self, other: "Circle", gap: float = 0.0) -> bool:
        return abs(other.center - self.center) >= self.radius + other.radius + gap


UNIT_CIRCLE = Circle(0j, 1.0)


@dataclass(frozen=True)
class Domain:
    """Open outer disc minus closed hole discs minus punctures.

    Boundary component 0 is the outer circle; component ``j >= 1`` is ``holes[j - 1]``.
    """

    outer: Circle
    holes: Tuple[Circle, ...] = ()
    punctures: Tuple[complex, ...] = ()

    @property
    def k(self) -> int:
        return 1 + len(self.holes)

    @property
    def n_punctures(self) -> int:
        return len(self.punctures)

    @property
    def components(self) -> Tuple[Circle, ...]:
        return (self.outer,) + tuple(self.holes)

    def component(self, j: int) -> Circle:
        if not (0 <= j < self.k):
            raise InvalidRegionRef(f"Boundary component {j} does not exist (k = {self.k})")
        return self.components[j]

    def without_punctures(self) -> "Domain":
        return Domain(self.outer, tuple(self.holes), ())


def build_domain(outer: Circle, holes: Sequence[Circle] = (), punctures: Iterable[complex] = (), gap: Optional[float] = None) -> Domain:
    """Validate and assemble a Domain."""
    gap = get_geometry_config().gap_tolerance if gap is None else gap
    holes = tuple(holes)
    punctures = tuple(complex(p) for p in punctures)

    for index, hole in enumerate(holes, start=1):
        if not outer.contains_disc_of(hole, gap):
            raise NestedHoleViolation(f"Hole {index} (center {hole.center}, radius {hole.radius}) is not strictly inside the outer circle")

    for a in range(len(holes)):
        for b in range(a + 1, len(holes)):
            if not holes[a].disjoint_from(holes[b], gap):
                raise OverlappingHoles(f"Holes {a + 1} and {b + 1} overlap or touch")

    for index, p in enumerate(punctures):
        inside_outer = abs(p - outer.center) < outer.radius - gap
        outside_holes = all(abs(p - hole.center) > hole.radius + gap for hole in holes)
        if not (inside_outer and outside_holes):
            raise PunctureOutsideDomain(f"Puncture {index} at {p} does not lie in the domain")

    for a in range(len(punctures)):
        for b in range(a + 1, len(punctures)):
            if abs(punctures[a] - punctures[b]) <= gap:
                raise DuplicatePuncture(f"Punctures {a} and {b} coincide at {punctures[a]}")

    domain = Domain(outer, holes, punctures)
    logger.debug(f"Built domain with k = {domain.k}, {domain.n_punctures} punctures")
    return domain


# =============================================================================
# Derived regions
# =============================================================================


class RegionKind(str, Enum):
    SIMPLY_CONNECTED = "simply_connected"
    DOUBLY_CONNECTED = "doubly_connected"
    FULL = "full"


@dataclass(frozen=True)
class RegionRef:
    kind: RegionKind
    j: Optional[int] = None
    l: Optional[int] = None

    @classmethod
    def simply(cls, j: int) -> "RegionRef":
        return cls(RegionKind.SIMPLY_CONNECTED, j)

    @classmethod
    def doubly(cls, j: int, l: int) -> "RegionRef":
        return cls(RegionKind.DOUBLY_CONNECTED, j, l)

    @classmethod
    def full(cls) -> "RegionRef":
        return cls(RegionKind.FULL)


@dataclass(frozen=True)
class RegionDescriptor:
    """Intersection of open discs (``inside=True``) and open disc exteriors.

    Membership tests use the closure widened by ``tolerance`` so boundary samples
    and chart images of boundary samples count as inside.
    """

    boundaries: Tuple[Tuple[Circle, bool], ...]
    tolerance: float = 1e-9

    @property
    def contains_infinity(self) -> bool:
        return all(not inside for _, inside in self.boundaries)

    @property
    def circles(self) -> Tuple[Circle, ...]:
        return tuple(circle for circle, _ in self.boundaries)

    def contains(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        mask = np.ones(z.shape, dtype=bool)
        for circle, inside in self.boundaries:
            slack = self.tolerance * max(1.0, circle.radius)
            distance = np.abs(z - circle.center)
            if inside:
                mask &= distance <= circle.radius + slack
            else:
                mask &= distance >= circle.radius - slack
        return mask

    def contains_annulus(self, center: complex, rho1: float, rho2: float) -> bool:
        """True if the closed annulus rho1 <= |z - center| <= rho2 lies in the closure."""
        for circle, inside in self.boundaries:
            slack = self.tolerance * max(1.0, circle.radius)
            offset = abs(circle.center - center)
            if inside:
                if offset + rho2 > circle.radius + slack:
                    return False
            else:
                inside_hole = offset + circle.radius <= rho1 + slack
                beyond = offset >= rho2 + circle.radius - slack
                if not (inside_hole or beyond):
                    return False
        return True


def derived_region(d: Domain, r: RegionRef) -> RegionDescriptor:
    """Region descriptor for D_j, D_{j,l} or the full domain (punctures ignored)."""
    if r.kind == RegionKind.FULL:
        return RegionDescriptor(((d.outer, True),) + tuple((hole, False) for hole in d.holes))

    def _check(index: Optional[int]) -> int:
        if index is None or not (0 <= index < d.k):
            raise InvalidRegionRef(f"Invalid boundary index {index} for a domain with k = {d.k}")
        return index

    if r.kind == RegionKind.SIMPLY_CONNECTED:
        j = _check(r.j)
        return RegionDescriptor(((d.component(j), j == 0),))

    if r.kind == RegionKind.DOUBLY_CONNECTED:
        j, l = _check(r.j), _check(r.l)
        if j == l:
            raise InvalidRegionRef(f"Doubly connected region needs two distinct components, got ({j}, {l})")
        if 0 in (j, l):
            hole = d.component(l if j == 0 else j)
            return RegionDescriptor(((d.outer, True), (hole, False)))
        return RegionDescriptor(((d.component(j), False), (d.component(l), False)))

    raise InvalidRegionRef(f"Unknown region kind {r.kind}")


def sample_angles(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError(f"Number of samples must be positive, got {n}")
    return 2 * np.pi * np.arange(n) / n


def sample_boundary(c: Circle, n: int) -> np.ndarray:
    """n equally spaced points on c, starting at angle 0."""
    return c.center + c.radius * np.exp(1j * sample_angles(n))
